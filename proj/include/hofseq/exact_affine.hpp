#pragma once

#include <cstdint>

#include "hofseq/bignum.hpp"
#include "hofseq/interval.hpp"

namespace hofseq {

/// Exact representation of the real a - alpha_k * b with a, b naturals.
/// Sums are componentwise; ordering is decided exactly (never through
/// floating evaluation), see compare().
struct ExactAffine {
  BigNat a, b;
  unsigned k = 0;
};

enum class Order { Less, Equal, Greater };

/// Exact order of u - alpha_k * v against 0. For k >= 2 this is the sign of
/// P_k(u/v) when u and v share a sign (P_k is strictly increasing on [0,oo)
/// and alpha_k is irrational); opposite signs decide immediately; k = 1 uses
/// the exact rational alpha_1 = 1/2.
Order affine_sign(unsigned k, const BigInt& u, const BigInt& v);

ExactAffine operator+(const ExactAffine& x, const ExactAffine& y);

Order compare(const ExactAffine& x, const ExactAffine& y);
Order compare(const ExactAffine& x, const Rational& q);

/// Enclosure of the denoted real given an enclosure of alpha_k.
RationalInterval evaluate(const ExactAffine& x, const RationalInterval& alpha);

/// Renders the denoted real to double, choosing the alpha precision from
/// the size of b so the cancellation is harmless.
double to_double(const ExactAffine& x);

/// Same, with a caller-provided alpha enclosure (must satisfy
/// width * (b+1) <= 2^-70 for full double accuracy).
double to_double(const ExactAffine& x, const RationalInterval& alpha);

}  // namespace hofseq
