#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hofseq/bignum.hpp"

namespace hofseq {

/// Closed interval with exact rational endpoints. All arithmetic here is
/// exact (the endpoints stay rationals); "outward" only ever means choosing
/// the enclosing endpoints, never floating rounding.
struct RationalInterval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }

  /// Distance from q to the interval (0 when contained).
  Rational distance_to(const Rational& q) const;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator+(const RationalInterval& a, const Rational& q);
RationalInterval operator-(const Rational& q, const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const Rational& q);

/// 1/a for a sign-definite interval (throws if 0 could be inside).
RationalInterval reciprocal(const RationalInterval& a);

/// [lo^e, hi^e]; requires lo >= 0.
RationalInterval pow_interval(const RationalInterval& a, unsigned e);

/// Enclosure of sqrt(a) for a.lo >= 0, with dyadic endpoints at 2^-scale_bits.
RationalInterval sqrt_interval(const RationalInterval& a, unsigned scale_bits = 256);

/// Exact sign of the integer-coefficient polynomial (ascending) at rational x.
int poly_sign_at(const std::vector<BigInt>& coeffs, const Rational& x);

/// Bisects a sign change of the polynomial down to width <= eps. Requires
/// opposite nonzero signs at lo and hi. If a midpoint evaluates to exactly
/// zero, an eps-wide interval centred there is returned.
RationalInterval poly_bisect_root(const std::vector<BigInt>& coeffs, Rational lo, Rational hi,
                                  const Rational& eps);

/// Certified scaled mantissa for a value x in [0,1): x * 2^bits lies in
/// [m, m+2]. Built from a rational bracket of width <= 2^-bits.
class FixedPointBracket {
 public:
  FixedPointBracket(const RationalInterval& iv, unsigned bits);

  unsigned bits() const { return bits_; }
  const BigNat& mantissa() const { return m_; }

  /// floor(x * n), or nullopt when the bracket straddles an integer.
  std::optional<BigNat> floor_mul(const BigNat& n) const;

 private:
  BigNat m_;
  unsigned bits_;
};

}  // namespace hofseq
