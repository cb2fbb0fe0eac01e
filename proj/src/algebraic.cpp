#include "hofseq/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hofseq {

namespace {

constexpr unsigned kWorkingBits = 224;  // conservative: cpp_bin_float<70> has ~233

void require_positive_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
}

}  // namespace

std::vector<BigInt> p_polynomial(unsigned k) {
  require_positive_k(k);
  std::vector<BigInt> c(k + 1, 0);
  c[0] = -1;
  c[1] += 1;
  c[k] += 1;  // k = 1 collapses to 2X - 1
  return c;
}

std::vector<BigInt> q_polynomial(unsigned k) {
  require_positive_k(k);
  std::vector<BigInt> c(k + 1, 0);
  c[0] = -1;
  c[k - 1] -= 1;
  c[k] += 1;  // k = 1 collapses to X - 2
  return c;
}

RationalInterval alpha_interval(unsigned k, const Rational& eps) {
  require_positive_k(k);
  if (sign_of(eps) <= 0) throw std::invalid_argument("alpha_interval: eps must be positive");
  // alpha_k lives in [1/2, 1); P_1(1/2) = 0 exactly, so k = 1 starts wider
  Rational lo = k == 1 ? Rational(0) : Rational(1, 2);
  return poly_bisect_root(p_polynomial(k), lo, Rational(1), eps);
}

RationalInterval beta_interval(unsigned k, const Rational& eps) {
  require_positive_k(k);
  if (sign_of(eps) <= 0) throw std::invalid_argument("beta_interval: eps must be positive");
  if (k == 1) return {Rational(2), Rational(2)};
  return poly_bisect_root(q_polynomial(k), Rational(1), Rational(2), eps);
}

namespace {

MpReal rational_to_real(const Rational& q) {
  return MpReal(BigInt(q.get_num()).get_str()) / MpReal(BigInt(q.get_den()).get_str());
}

MpComplex poly_eval(const std::vector<MpComplex>& coeffs, const MpComplex& z) {
  MpComplex acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

}  // namespace

MpReal alpha_value(unsigned k) {
  return rational_to_real(alpha_interval(k, pow2_rational(-240)).mid());
}

MpComplex complex_pow(MpComplex base, unsigned long e) {
  MpComplex acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

RootSet compute_root_set(unsigned k, unsigned precision_bits) {
  if (k < 2) throw std::invalid_argument("compute_root_set: requires k >= 2");
  if (precision_bits < 16 || precision_bits > kWorkingBits)
    throw std::invalid_argument("compute_root_set: precision_bits outside [16, 224]");

  std::vector<MpComplex> q(k + 1, MpComplex(0));
  q[0] = -1;
  q[k - 1] = -1;
  q[k] = 1;
  std::vector<MpComplex> dq(k);  // derivative
  for (unsigned i = 1; i <= k; ++i) dq[i - 1] = q[i] * i;

  // Aberth–Ehrlich from a slightly asymmetric circle
  std::vector<MpComplex> z(k);
  const MpReal pi = 4 * atan(MpReal(1));
  for (unsigned i = 0; i < k; ++i) {
    MpReal angle = 2 * pi * (MpReal(i) + MpReal("0.3572")) / k;
    z[i] = MpComplex(MpReal("1.7") * cos(angle), MpReal("1.7") * sin(angle));
  }
  const MpReal step_tol = pow(MpReal(2), -static_cast<int>(kWorkingBits + 8));
  for (unsigned round = 0; round < 500; ++round) {
    MpReal worst = 0;
    for (unsigned i = 0; i < k; ++i) {
      MpComplex pv = poly_eval(q, z[i]);
      if (pv == MpComplex(0)) continue;
      MpComplex dv = poly_eval(dq, z[i]);
      MpComplex w = pv / dv;
      MpComplex s = 0;
      for (unsigned j = 0; j < k; ++j)
        if (j != i) s += 1 / (z[i] - z[j]);
      MpComplex corr = w / (MpComplex(1) - w * s);
      z[i] -= corr;
      worst = std::max(worst, MpReal(abs(corr)));
    }
    if (worst < step_tol) break;
  }

  std::sort(z.begin(), z.end(), [](const MpComplex& a, const MpComplex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });

  // snap: roots[0] real positive; even k ends with a real negative root;
  // the rest are adjacent conjugate pairs
  const MpReal snap_tol = pow(MpReal(2), -40);
  auto force_real = [&](MpComplex& r) {
    if (abs(r.imag()) > snap_tol) throw std::runtime_error("root_set: expected a real root");
    r = MpComplex(r.real(), MpReal(0));
  };
  force_real(z[0]);
  std::size_t i = 1;
  while (i < k) {
    if (abs(z[i].imag()) <= snap_tol) {
      force_real(z[i]);
      ++i;
      continue;
    }
    if (i + 1 >= k) throw std::runtime_error("root_set: unmatched complex root");
    MpComplex avg = (z[i] + conj(z[i + 1])) / 2;
    if (avg.imag() < 0) avg = conj(avg);  // positive imaginary part first
    z[i] = avg;
    z[i + 1] = conj(avg);
    i += 2;
  }

  const MpReal residual_tol = pow(MpReal(2), -static_cast<int>(precision_bits / 2));
  for (unsigned j = 0; j < k; ++j) {
    if (abs(poly_eval(q, z[j])) > residual_tol)
      throw std::runtime_error("root_set: residual tolerance unmet at requested precision");
  }
  if (k % 2 == 0 && !(z[k - 1].imag() == 0 && z[k - 1].real() < 0))
    throw std::runtime_error("root_set: even k must end with a real negative root");

  RootSet rs;
  rs.k = k;
  rs.precision_bits = precision_bits;
  rs.roots = z;
  MpReal alpha = alpha_value(k);
  rs.c.resize(k);
  rs.d.resize(k);
  for (unsigned j = 0; j < k; ++j) {
    const MpComplex& r = z[j];
    rs.c[j] = complex_pow(r, k) / (MpComplex(k) * r - MpComplex(k - 1));
    rs.d[j] = (j == 0) ? MpComplex(0) : rs.c[j] * (1 / r - alpha);
  }
  return rs;
}

namespace {

// |d|^2 = m^k (1 - 2 a x + a^2 m) / (m (k^2 m - 2 k (k-1) x + (k-1)^2))
// for a root r with m = |r|^2, x = Re r, and a = alpha_k.
RationalInterval d_abs_sq(unsigned k, const RationalInterval& alpha, const RationalInterval& m,
                          const RationalInterval& x) {
  RationalInterval one{Rational(1), Rational(1)};
  RationalInterval num = pow_interval(m, k) *
                         (one - alpha * x * Rational(2) + alpha * alpha * m);
  RationalInterval den = m * (m * Rational(static_cast<long>(k) * k) -
                              x * Rational(2 * static_cast<long>(k) * (k - 1)) +
                              Rational(static_cast<long>(k - 1) * (k - 1)));
  return num * reciprocal(den);
}

}  // namespace

Rational residue_upper_bound(unsigned k, unsigned p) {
  if (k < 2 || k > 4)
    throw std::invalid_argument("residue_upper_bound: requires k in {2,3,4}");
  const Rational eps = pow2_rational(-220);
  RationalInterval alpha = alpha_interval(k, eps);
  RationalInterval one{Rational(1), Rational(1)};

  RationalInterval m, x;           // |r_{k,1}|^2 and Re r_{k,1}
  RationalInterval y{Rational(0), Rational(0)};  // |r_{4,3}|
  if (k == 2) {
    // r_{2,1} = -alpha_2
    m = alpha * alpha;
    x = -alpha;
  } else if (k == 3) {
    // product of roots is 1 and r1 r2 = |r1|^2, so |r1|^2 = 1/beta = alpha
    RationalInterval beta = beta_interval(3, eps);
    m = alpha;
    x = (one - beta) * Rational(1, 2);
  } else {
    // k = 4: the real negative root is -y with y^4 + y^3 - 1 = 0;
    // product of roots is -1, so |r1|^2 beta (-y) = -1.
    RationalInterval beta = beta_interval(4, eps);
    std::vector<BigInt> ypoly{-1, 0, 0, 1, 1};
    y = poly_bisect_root(ypoly, Rational(0), Rational(1), eps);
    m = reciprocal(beta * y);
    x = (one - beta + y) * Rational(1, 2);
  }

  RationalInterval mod1 = sqrt_interval(m);             // |r_{k,1}|
  if (mod1.hi >= 1)
    throw std::runtime_error("residue_upper_bound: secondary modulus not certified < 1");
  RationalInterval d1 = sqrt_interval(d_abs_sq(k, alpha, m, x));
  RationalInterval r =
      d1 * pow_interval(mod1, p) * reciprocal(one - pow_interval(mod1, k));
  if (k >= 3) r = r * Rational(2);  // conjugate pair
  if (k == 4) {
    RationalInterval c3 = pow_interval(y, 4) * reciprocal(y * Rational(4) + Rational(3));
    RationalInterval d3 = c3 * (reciprocal(y) + alpha);  // |d_{4,3}|, all factors positive
    r = r + d3 * pow_interval(y, p) * reciprocal(one - pow_interval(y, 4));
  }
  if (sign_of(r.hi) <= 0) throw std::runtime_error("residue_upper_bound: nonpositive bound");
  return r.hi;
}

Rational residue_bound(const RootSet& rs, unsigned p) { return residue_upper_bound(rs.k, p); }

MpReal residue_estimate(const RootSet& rs, unsigned p) {
  MpReal total = 0;
  for (unsigned i = 1; i < rs.k; ++i) {
    MpReal mod = abs(rs.roots[i]);
    total += MpReal(abs(rs.d[i])) * pow(mod, static_cast<int>(p)) /
             (1 - pow(mod, static_cast<int>(rs.k)));
  }
  return total;
}

MpComplex a_closed_form(const RootSet& rs, unsigned n) {
  MpComplex total = 0;
  for (unsigned i = 0; i < rs.k; ++i) total += rs.c[i] * complex_pow(rs.roots[i], n);
  return total;
}

std::vector<BigInt> coefficient_polynomial(const RootSet& rs) {
  const unsigned k = rs.k;
  BigInt lead = pow_uint(BigNat(k), k) + (k > 1 ? pow_uint(BigNat(k - 1), k - 1) : BigInt(0));
  std::vector<MpComplex> poly{MpComplex(1)};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<MpComplex> next(poly.size() + 1, MpComplex(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * rs.c[i];
    }
    poly = std::move(next);
  }
  MpReal lead_r(lead.get_str());
  std::vector<BigInt> out(poly.size());
  for (std::size_t j = 0; j < poly.size(); ++j) {
    MpReal scaled = poly[j].real() * lead_r;
    double approx = static_cast<double>(scaled);
    if (std::abs(approx) >= 4.5e15)
      throw std::runtime_error("coefficient_polynomial: coefficient too large to round safely");
    long long rounded = std::llround(approx);
    MpReal gap = abs(scaled - MpReal(rounded));
    MpReal imag_gap = abs(poly[j].imag() * lead_r);
    if (gap >= MpReal(1) / 4 || imag_gap >= MpReal(1) / 4)
      throw std::runtime_error("coefficient_polynomial: rounding gap exceeds 1/4 (precision too low)");
    out[j] = BigInt(static_cast<long>(rounded));
  }
  if (out[0] != -1)
    throw std::runtime_error("coefficient_polynomial: constant term is not -1");
  if (out[k - 1] != -lead)
    throw std::runtime_error("coefficient_polynomial: degree k-1 term inconsistent with sum c_i = 1");
  return out;
}

std::vector<BigInt> shifted_root_polynomial(unsigned k) {
  if (k < 2) throw std::invalid_argument("shifted_root_polynomial: requires k >= 2");
  // (X + k-1)^k - k (X + k-1)^{k-1} - k^k, expanded with exact binomials
  std::vector<BigInt> out(k + 1, 0);
  BigInt km1(static_cast<long>(k - 1));
  BigInt binom = 1;  // C(k, j) incrementally
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * static_cast<long>(k - j + 1) / static_cast<long>(j);
    out[j] += binom * pow_uint(km1, k - j);
  }
  binom = 1;
  for (unsigned j = 0; j <= k - 1; ++j) {
    if (j > 0) binom = binom * static_cast<long>(k - 1 - j + 1) / static_cast<long>(j);
    out[j] -= BigInt(static_cast<long>(k)) * binom * pow_uint(km1, k - 1 - j);
  }
  out[0] -= pow_uint(BigNat(k), k);
  return out;
}

std::vector<BigInt> reciprocal_shifted_root_polynomial(unsigned k) {
  std::vector<BigInt> s = shifted_root_polynomial(k);
  std::vector<BigInt> out(s.rbegin(), s.rend());
  for (auto& c : out) c = -c;  // leading coefficient k^k + (k-1)^{k-1}
  return out;
}

}  // namespace hofseq
