#include "hofseq/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofseq {

Rational RationalInterval::distance_to(const Rational& q) const {
  if (q < lo) return lo - q;
  if (q > hi) return q - hi;
  return Rational(0);
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval operator+(const RationalInterval& a, const Rational& q) {
  return {a.lo + q, a.hi + q};
}

RationalInterval operator-(const Rational& q, const RationalInterval& a) {
  return {q - a.hi, q - a.lo};
}

RationalInterval operator*(const RationalInterval& a, const Rational& q) {
  if (sign_of(q) >= 0) return {a.lo * q, a.hi * q};
  return {a.hi * q, a.lo * q};
}

RationalInterval reciprocal(const RationalInterval& a) {
  if (sign_of(a.lo) <= 0 && sign_of(a.hi) >= 0)
    throw std::domain_error("reciprocal: interval may contain zero");
  return {1 / a.hi, 1 / a.lo};
}

RationalInterval pow_interval(const RationalInterval& a, unsigned e) {
  if (sign_of(a.lo) < 0) throw std::domain_error("pow_interval: negative endpoint");
  auto pw = [e](const Rational& q) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    return r;  // canonical since q was
  };
  if (e == 0) return {Rational(1), Rational(1)};
  return {pw(a.lo), pw(a.hi)};
}

namespace {

// floor(sqrt(q) * 2^t) for q >= 0
BigNat sqrt_scaled_floor(const Rational& q, unsigned t) {
  BigNat num = q.get_num(), den = q.get_den();
  BigNat scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), 2 * t);
  scaled /= den;  // floor
  BigNat root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return root;
}

}  // namespace

RationalInterval sqrt_interval(const RationalInterval& a, unsigned scale_bits) {
  if (sign_of(a.lo) < 0) throw std::domain_error("sqrt_interval: negative endpoint");
  Rational scale = pow2_rational(-static_cast<long>(scale_bits));
  Rational lo = Rational(sqrt_scaled_floor(a.lo, scale_bits)) * scale;
  Rational hi = Rational(sqrt_scaled_floor(a.hi, scale_bits) + 1) * scale;
  return {lo, hi};
}

int poly_sign_at(const std::vector<BigInt>& coeffs, const Rational& x) {
  if (coeffs.empty()) return 0;
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  // sum c_i n^i d^(deg-i), Horner on n with a running power of d
  BigInt acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = acc * n + coeffs[i] * pow_uint(d, coeffs.size() - 1 - i);
  }
  return sign_of(acc);
}

RationalInterval poly_bisect_root(const std::vector<BigInt>& coeffs, Rational lo, Rational hi,
                                  const Rational& eps) {
  if (sign_of(eps) <= 0) throw std::invalid_argument("poly_bisect_root: eps must be positive");
  int slo = poly_sign_at(coeffs, lo);
  int shi = poly_sign_at(coeffs, hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("poly_bisect_root: endpoints must have opposite nonzero signs");
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    int s = poly_sign_at(coeffs, mid);
    if (s == 0) {
      // exact rational root (happens for k = 1); centre an eps-wide bracket
      return {mid - eps / 2, mid + eps / 2};
    }
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

FixedPointBracket::FixedPointBracket(const RationalInterval& iv, unsigned bits) : bits_(bits) {
  if (sign_of(iv.lo) < 0 || iv.hi >= 1)
    throw std::invalid_argument("FixedPointBracket: value must lie in [0,1)");
  if (iv.width() > pow2_rational(-static_cast<long>(bits)))
    throw std::invalid_argument("FixedPointBracket: interval too wide for requested bits");
  // m = floor(lo * 2^bits); then x*2^bits in [m, m+2]
  BigNat num = iv.lo.get_num(), den = iv.lo.get_den();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  m_ = num / den;
}

std::optional<BigNat> FixedPointBracket::floor_mul(const BigNat& n) const {
  BigNat lo = m_ * n;
  BigNat hi = lo + 2 * n;
  mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), bits_);
  mpz_fdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), bits_);
  if (lo != hi) return std::nullopt;
  return lo;
}

}  // namespace hofseq
