#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hofseq/bignum.hpp"

namespace hofseq {

/// Hofstadter's nested recursion F_k(0) = 0, F_k(n) = n - F_k^k(n-1),
/// evaluated bottom-up against a growing memo table. An instance is bound
/// to one k >= 1 forever; the table only grows and is never invalidated.
/// After warm_up(n) the instance may be read concurrently.
class HofstadterF {
 public:
  explicit HofstadterF(unsigned k);

  unsigned k() const { return k_; }

  /// F_k(n)
  std::uint64_t value(std::uint64_t n);

  /// F_k^j(n), the j-fold iterate; j = 0 is the identity.
  std::uint64_t iterate(unsigned j, std::uint64_t n);

  /// L_k(n) = n + F_k^{k-1}(n), the rightmost antecedent of n under F_k.
  std::uint64_t right_adjoint(std::uint64_t n);

  void warm_up(std::uint64_t n_max) { extend(n_max); }

  /// View of the filled table prefix; entry i is F_k(i).
  std::span<const std::uint64_t> table() const { return memo_; }

 private:
  void extend(std::uint64_t n);

  unsigned k_;
  std::vector<std::uint64_t> memo_;
};

/// The Fibonacci-like base sequence A_{k,p} = p+1 for p < k,
/// A_{k,p} = A_{k,p-1} + A_{k,p-k} afterwards; arbitrary precision,
/// cached and extended on demand. Strictly increasing in p.
class FiboSequence {
 public:
  explicit FiboSequence(unsigned k);

  unsigned k() const { return k_; }

  /// A_{k,p}. The reference is invalidated by any later growth of the cache.
  const BigNat& at(std::size_t p);

  /// Grows the cache until its last value exceeds n.
  void ensure_value_above(const BigNat& n);

  std::size_t size() const { return values_.size(); }
  const std::vector<BigNat>& values() const { return values_; }

 private:
  unsigned k_;
  std::vector<BigNat> values_;
};

/// Number of subsets of {1..p} whose elements are pairwise at distance >= k,
/// counted by explicit backtracking enumeration (no recurrence involved).
/// Guarded to p <= 24.
BigNat sparse_subset_count(unsigned k, unsigned p);

}  // namespace hofseq
