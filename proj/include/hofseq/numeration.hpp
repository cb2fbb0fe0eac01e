#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hofseq/fk.hpp"

namespace hofseq {

/// A k-decomposition: a non-decreasing multiset of positions p with value
/// sum A_{k,p}. Canonical when consecutive gaps are >= k (unique per
/// integer), lax when gaps are >= k-1 (repetitions only possible at k = 1).
struct Decomp {
  unsigned k = 0;
  std::vector<std::uint32_t> positions;

  bool is_canonical() const;
  bool is_lax() const;
  bool empty() const { return positions.empty(); }
};

/// Least position of a canonical decomposition; infinite exactly for n = 0.
class Rank {
 public:
  static Rank infinity() { return Rank{}; }
  static Rank finite(std::uint32_t r) {
    Rank x;
    x.r_ = r;
    return x;
  }

  bool is_infinite() const { return !r_.has_value(); }
  std::uint32_t value() const;

  /// rank < q, total: infinity is below nothing.
  bool less_than(std::uint64_t q) const { return r_.has_value() && *r_ < q; }

  friend bool operator==(const Rank&, const Rank&) = default;

 private:
  std::optional<std::uint32_t> r_;
};

/// Sum of A_{k,p} over the positions of d.
BigNat decomp_sum(FiboSequence& seq, const Decomp& d);

/// The unique canonical k-decomposition of n (greedy largest-term-first).
Decomp zeckendorf(FiboSequence& seq, const BigNat& n);

/// Repairs a lax decomposition into the canonical one with equal sum by
/// repeatedly merging the highest pair at distance k-1 (positions p-1 and
/// p-k become p). Rejects non-lax input; the general case is the explicit
/// composition zeckendorf(sum(d)).
Decomp normalize(Decomp d);

/// Least position of zeckendorf(k, n); infinity for n = 0.
Rank rank_of(FiboSequence& seq, const BigNat& n);

/// D_k(n+1) from the canonical D_k(n): adjoin {0} when rank >= k, otherwise
/// bump the rank position by one and normalize. Rejects non-canonical input.
Decomp successor(const Decomp& d);

Decomp shift_left(Decomp d, unsigned q);         // p -> p + q
Decomp shift_right_upper(Decomp d, unsigned q);  // p -> max(0, p - q)
Decomp shift_right(Decomp d, unsigned q);        // drop p < q, subtract q

/// F_k(n) as the upper right shift of the canonical decomposition.
BigNat f_by_shift(FiboSequence& seq, const BigNat& n);

/// F_k^q(n) via the q-fold upper right shift; valid for 0 <= q <= k.
BigNat f_iter_by_shift(FiboSequence& seq, unsigned q, const BigNat& n);

/// The Meek–Van Rees companion: sum of the plain right shift by one;
/// satisfies f_tilde(n) = F_k(n+1) - 1.
BigNat f_tilde(FiboSequence& seq, const BigNat& n);

/// L_k^q(n) via the left shift by q.
BigNat l_by_shift(FiboSequence& seq, const BigNat& n, unsigned q);

/// Digit string, most-significant position left (e.g. k=2, n=17 -> "100101").
/// Digits above 9 (possible only for repeated positions) are rejected.
std::string digit_string(const Decomp& d);

}  // namespace hofseq
