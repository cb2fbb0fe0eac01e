#include "hofseq/fk.hpp"

#include <cassert>
#include <stdexcept>

namespace hofseq {

namespace {
void require_positive_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
}
}  // namespace

HofstadterF::HofstadterF(unsigned k) : k_(k) {
  require_positive_k(k);
  memo_.push_back(0);
}

void HofstadterF::extend(std::uint64_t n) {
  while (memo_.size() <= n) {
    std::uint64_t m = memo_.size();
    std::uint64_t v = m - 1;
    for (unsigned j = 0; j < k_; ++j) v = memo_[v];
    assert(v < m);  // 0 <= F_k <= id holds inductively, so this never underflows
    memo_.push_back(m - v);
  }
}

std::uint64_t HofstadterF::value(std::uint64_t n) {
  extend(n);
  return memo_[n];
}

std::uint64_t HofstadterF::iterate(unsigned j, std::uint64_t n) {
  extend(n);
  std::uint64_t v = n;
  for (unsigned i = 0; i < j && v > 0; ++i) v = memo_[v];
  return v;
}

std::uint64_t HofstadterF::right_adjoint(std::uint64_t n) {
  return n + iterate(k_ - 1, n);
}

FiboSequence::FiboSequence(unsigned k) : k_(k) {
  require_positive_k(k);
  values_.push_back(1);
}

const BigNat& FiboSequence::at(std::size_t p) {
  while (values_.size() <= p) {
    std::size_t m = values_.size();
    std::size_t back = m >= k_ ? m - k_ : 0;
    values_.push_back(values_[m - 1] + values_[back]);
  }
  return values_[p];
}

void FiboSequence::ensure_value_above(const BigNat& n) {
  while (values_.back() <= n) at(values_.size());
}

namespace {
// subsets of {from..p} with gaps >= k, counted one by one
std::uint64_t count_from(unsigned k, unsigned p, unsigned from) {
  std::uint64_t total = 1;  // the empty choice
  for (unsigned q = from; q <= p; ++q) total += count_from(k, p, q + k);
  return total;
}
}  // namespace

BigNat sparse_subset_count(unsigned k, unsigned p) {
  require_positive_k(k);
  if (p > 24) throw std::invalid_argument("sparse_subset_count: p exceeds the enumeration guard (24)");
  if (p == 0) return 1;
  return BigNat(static_cast<unsigned long>(count_from(k, p, 1)));
}

}  // namespace hofseq
