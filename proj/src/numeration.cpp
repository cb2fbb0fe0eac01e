#include "hofseq/numeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofseq {

namespace {

bool gaps_at_least(const std::vector<std::uint32_t>& pos, std::uint32_t g) {
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (pos[i] < pos[i - 1]) throw std::invalid_argument("decomposition positions not sorted");
    if (pos[i] - pos[i - 1] < g) return false;
  }
  return true;
}

}  // namespace

bool Decomp::is_canonical() const { return gaps_at_least(positions, k); }
bool Decomp::is_lax() const { return k == 1 || gaps_at_least(positions, k - 1); }

std::uint32_t Rank::value() const {
  if (!r_.has_value()) throw std::logic_error("rank is infinite");
  return *r_;
}

BigNat decomp_sum(FiboSequence& seq, const Decomp& d) {
  if (d.k != seq.k()) throw std::invalid_argument("decomposition/sequence k mismatch");
  BigNat total = 0;
  for (std::uint32_t p : d.positions) total += seq.at(p);
  return total;
}

Decomp zeckendorf(FiboSequence& seq, const BigNat& n) {
  if (sign_of(n) < 0) throw std::invalid_argument("zeckendorf: n must be a natural");
  Decomp d;
  d.k = seq.k();
  BigNat rest = n;
  if (rest == 0) return d;
  seq.ensure_value_above(rest);
  const auto& values = seq.values();
  // largest p with A_{k,p} <= rest, repeatedly
  auto end = values.end();
  while (rest > 0) {
    auto it = std::upper_bound(values.begin(), end, rest);
    std::size_t p = static_cast<std::size_t>(it - values.begin()) - 1;
    d.positions.push_back(static_cast<std::uint32_t>(p));
    rest -= values[p];
    end = it;  // next position is strictly smaller
  }
  std::reverse(d.positions.begin(), d.positions.end());
  return d;
}

Decomp normalize(Decomp d) {
  if (!d.is_lax()) throw std::invalid_argument("normalize: input is not lax");
  auto& pos = d.positions;
  const std::uint32_t gap = d.k - 1;
  while (true) {
    // highest adjacent pair at distance exactly k-1
    std::size_t idx = pos.size();
    for (std::size_t i = pos.size(); i-- > 1;) {
      if (pos[i] - pos[i - 1] == gap) {
        idx = i;
        break;
      }
    }
    if (idx == pos.size()) break;
    pos[idx - 1] = pos[idx] + 1;  // A_{p-1} + A_{p-k} = A_p
    pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return d;
}

Rank rank_of(FiboSequence& seq, const BigNat& n) {
  Decomp d = zeckendorf(seq, n);
  if (d.empty()) return Rank::infinity();
  return Rank::finite(d.positions.front());
}

Decomp successor(const Decomp& d) {
  if (!d.is_canonical()) throw std::invalid_argument("successor: input is not canonical");
  Decomp out = d;
  if (out.empty()) {
    out.positions.push_back(0);
    return out;
  }
  std::uint32_t r = out.positions.front();
  if (r >= out.k) {
    out.positions.insert(out.positions.begin(), 0);
    return out;
  }
  out.positions.front() = r + 1;  // still lax: the next position is >= r + k
  return normalize(std::move(out));
}

Decomp shift_left(Decomp d, unsigned q) {
  for (auto& p : d.positions) p += q;
  return d;
}

Decomp shift_right_upper(Decomp d, unsigned q) {
  for (auto& p : d.positions) p = p > q ? p - q : 0;
  return d;
}

Decomp shift_right(Decomp d, unsigned q) {
  auto& pos = d.positions;
  auto first = std::lower_bound(pos.begin(), pos.end(), q);
  pos.erase(pos.begin(), first);
  for (auto& p : pos) p -= q;
  return d;
}

BigNat f_by_shift(FiboSequence& seq, const BigNat& n) {
  return decomp_sum(seq, shift_right_upper(zeckendorf(seq, n), 1));
}

BigNat f_iter_by_shift(FiboSequence& seq, unsigned q, const BigNat& n) {
  if (q > seq.k())
    throw std::invalid_argument("f_iter_by_shift: q must satisfy 0 <= q <= k");
  return decomp_sum(seq, shift_right_upper(zeckendorf(seq, n), q));
}

BigNat f_tilde(FiboSequence& seq, const BigNat& n) {
  return decomp_sum(seq, shift_right(zeckendorf(seq, n), 1));
}

BigNat l_by_shift(FiboSequence& seq, const BigNat& n, unsigned q) {
  return decomp_sum(seq, shift_left(zeckendorf(seq, n), q));
}

std::string digit_string(const Decomp& d) {
  if (d.empty()) return "0";
  std::uint32_t top = d.positions.back();
  std::string s(top + 1, '0');
  for (std::uint32_t p : d.positions) {
    char& c = s[top - p];  // most-significant left
    if (c == '9') throw std::invalid_argument("digit_string: digit above 9");
    ++c;
  }
  return s;
}

}  // namespace hofseq
