#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cstdint>
#include <vector>

#include "hofseq/interval.hpp"

namespace hofseq {

/// Working multiprecision reals/complexes for the numerical (non-certified)
/// side: ~70 decimal digits, about 233 bits of mantissa.
using MpReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<70>>;
using MpComplex = boost::multiprecision::cpp_complex<70>;

/// Certified bracket of alpha_k, the unique positive zero of X^k + X - 1,
/// of width <= eps, by exact rational bisection (P(lo) < 0 < P(hi)).
/// Seeded in [1/2, 1); alpha_1 = 1/2 exactly gets an eps-wide bracket.
RationalInterval alpha_interval(unsigned k, const Rational& eps);

/// Certified bracket of beta_k = 1/alpha_k, the positive zero of
/// X^k - X^{k-1} - 1, inside [1, 2]. beta_1 = 2 exactly.
RationalInterval beta_interval(unsigned k, const Rational& eps);

/// Ascending coefficients of P_k = X^k + X - 1.
std::vector<BigInt> p_polynomial(unsigned k);
/// Ascending coefficients of Q_k = X^k - X^{k-1} - 1.
std::vector<BigInt> q_polynomial(unsigned k);

/// The k zeros of Q_k in decreasing lexicographic order of (Re, Im),
/// with the closed-form coefficients attached:
///   c[i] = r_i^k / (k r_i - (k-1)),  d[i] = c[i] (1/r_i - alpha_k), d[0] = 0.
/// roots[0] is beta_k; for even k the last root is real negative; non-real
/// roots come in adjacent conjugate pairs (positive imaginary part first).
struct RootSet {
  unsigned k = 0;
  unsigned precision_bits = 0;
  std::vector<MpComplex> roots;
  std::vector<MpComplex> c;
  std::vector<MpComplex> d;
};

/// Finds all k roots by Aberth–Ehrlich simultaneous iteration, sorts and
/// conjugate-snaps them, and validates |Q_k(r)| <= 2^-(precision_bits/2).
/// Requires k >= 2 and precision_bits <= 224 (the working precision).
RootSet compute_root_set(unsigned k, unsigned precision_bits = 128);

/// Certified upper bound on R_k(p) = sum_{i>=1} |d_i| |r_i|^p / (1 - |r_i|^k)
/// for k in {2,3,4}, computed purely in exact rational interval arithmetic
/// (|r_{2,1}| = alpha_2, |r_{3,1}|^2 = alpha_3, |r_{4,1}|^2 = 1/(beta_4 y)
/// and |r_{4,3}| = y with y the positive zero of Y^4 + Y^3 - 1; real parts
/// from the root sum). Every step only widens, so the result is a majorant.
Rational residue_upper_bound(unsigned k, unsigned p);

/// Contract-shaped wrapper: the bound for rs.k (must be in {2,3,4}).
Rational residue_bound(const RootSet& rs, unsigned p);

/// Float-evaluated R_k(p) from the root set (cross-check only, not certified).
MpReal residue_estimate(const RootSet& rs, unsigned p);

/// sum_i c_i r_i^n; equals A_{k,n} up to the working precision.
MpComplex a_closed_form(const RootSet& rs, unsigned n);

/// Integer-coefficient polynomial (ascending) annihilating the c_i:
/// (k^k + (k-1)^{k-1}) prod (X - c_i), each coefficient rounded to the
/// nearest integer with the rounding gap verified < 1/4. Constant term -1.
std::vector<BigInt> coefficient_polynomial(const RootSet& rs);

/// Monic expansion of (X + k-1)^k - k (X + k-1)^{k-1} - k^k, whose zeros are
/// k r_i - (k-1); degree-1 coefficient is 0 and the constant term is
/// -(k^k + (k-1)^{k-1}).
std::vector<BigInt> shifted_root_polynomial(unsigned k);

/// Integer polynomial with zeros (k r_i - (k-1))^{-1}: the reversal of the
/// one above, negated to leading coefficient k^k + (k-1)^{k-1}. The sign of
/// that leading coefficient was settled by evaluating against numerically
/// computed roots (at k=2 the zeros ±1/sqrt(5) force 5X^2-1).
std::vector<BigInt> reciprocal_shifted_root_polynomial(unsigned k);

/// Midpoint of an alpha bracket as a working real (width 2^-240).
MpReal alpha_value(unsigned k);

MpComplex complex_pow(MpComplex base, unsigned long e);

}  // namespace hofseq
