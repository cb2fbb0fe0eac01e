#include "hofseq/exact_affine.hpp"

#include <stdexcept>

#include "hofseq/algebraic.hpp"

namespace hofseq {

Order affine_sign(unsigned k, const BigInt& u, const BigInt& v) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  int su = sign_of(u), sv = sign_of(v);
  if (sv == 0) return su < 0 ? Order::Less : su > 0 ? Order::Greater : Order::Equal;
  if (su <= 0 && sv > 0) return Order::Less;     // u - alpha v < 0
  if (su >= 0 && sv < 0) return Order::Greater;  // -alpha v > 0
  if (k == 1) {
    // alpha_1 = 1/2 exactly
    int s = sign_of(BigInt(2 * u - v));
    return s < 0 ? Order::Less : s > 0 ? Order::Greater : Order::Equal;
  }
  // u and v share a sign; u/v > 0 and u - alpha v = v (u/v - alpha), with
  // sign(u/v - alpha) = sign(P_k(u/v)) since P_k increases on [0, oo).
  BigInt a = u, b = v;
  if (sv < 0) {
    a = -a;
    b = -b;
  }
  // sign of a^k + a b^{k-1} - b^k
  BigInt val = pow_uint(a, k) + a * pow_uint(b, k - 1) - pow_uint(b, k);
  int s = sign_of(val);
  if (s == 0)
    throw std::logic_error("affine_sign: P_k vanished at a rational (alpha_k is irrational for k >= 2)");
  if (sv < 0) s = -s;
  return s < 0 ? Order::Less : Order::Greater;
}

ExactAffine operator+(const ExactAffine& x, const ExactAffine& y) {
  if (x.k != y.k) throw std::invalid_argument("ExactAffine: k mismatch");
  return {x.a + y.a, x.b + y.b, x.k};
}

Order compare(const ExactAffine& x, const ExactAffine& y) {
  if (x.k != y.k) throw std::invalid_argument("compare: k mismatch");
  return affine_sign(x.k, BigInt(x.a - y.a), BigInt(x.b - y.b));
}

Order compare(const ExactAffine& x, const Rational& q) {
  // a - alpha b vs num/den  <=>  (a den - num) - alpha (b den) vs 0
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  return affine_sign(x.k, BigInt(x.a * den - num), BigInt(x.b * den));
}

RationalInterval evaluate(const ExactAffine& x, const RationalInterval& alpha) {
  Rational a(x.a), b(x.b);
  return {a - alpha.hi * b, a - alpha.lo * b};
}

double to_double(const ExactAffine& x, const RationalInterval& alpha) {
  return evaluate(x, alpha).mid().get_d();
}

double to_double(const ExactAffine& x) {
  // alpha precision scaled so that b * width <= 2^-80
  long extra = static_cast<long>(mpz_sizeinbase(x.b.get_mpz_t(), 2));
  RationalInterval alpha = alpha_interval(x.k, pow2_rational(-(80 + extra)));
  return to_double(x, alpha);
}

}  // namespace hofseq
