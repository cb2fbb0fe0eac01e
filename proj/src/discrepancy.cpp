#include "hofseq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace hofseq {

ExactAffine delta(HofstadterF& f, std::uint64_t n) {
  return {BigNat(static_cast<unsigned long>(f.value(n))), BigNat(static_cast<unsigned long>(n)),
          f.k()};
}

ExactAffine delta(FiboSequence& seq, const BigNat& n) {
  return {f_by_shift(seq, n), n, seq.k()};
}

ExactAffine delta_of_base(FiboSequence& seq, unsigned p) {
  BigNat fa = seq.at(p > 0 ? p - 1 : 0);
  return {fa, BigNat(seq.at(p)), seq.k()};
}

ExtremaTable extrema_table(unsigned k, unsigned p_max) {
  FiboSequence seq(k);
  ExtremaTable t;
  t.k = k;
  t.dmax.push_back({BigNat(0), BigNat(0), k});
  t.dmin.push_back({BigNat(0), BigNat(0), k});
  for (unsigned p = 1; p <= p_max; ++p) {
    ExactAffine d = delta_of_base(seq, p - 1);
    unsigned pk = p >= k ? p - k : 0;
    ExactAffine up = t.dmax[pk] + d;
    t.dmax.push_back(compare(up, t.dmax[p - 1]) == Order::Greater ? up : t.dmax[p - 1]);
    ExactAffine dn = t.dmin[pk] + d;
    t.dmin.push_back(compare(dn, t.dmin[p - 1]) == Order::Less ? dn : t.dmin[p - 1]);
  }
  return t;
}

CertifiedBounds certify_bounds(unsigned k, unsigned p, const Rational& alpha_eps) {
  if (k != 3 && k != 4) throw std::invalid_argument("certify_bounds: requires k in {3,4}");
  if (sign_of(alpha_eps) <= 0) throw std::invalid_argument("certify_bounds: alpha_eps must be positive");
  ExtremaTable t = extrema_table(k, p);
  const ExactAffine& dmax = t.dmax[p];
  const ExactAffine& dmin = t.dmin[p];
  BigNat b_max = dmax.b > dmin.b ? dmax.b : dmin.b;
  Rational width = alpha_eps / Rational(b_max + 1);
  RationalInterval alpha = alpha_interval(k, width);
  Rational residue = residue_upper_bound(k, p);

  CertifiedBounds out;
  out.k = k;
  out.p = p;
  out.residue = residue;
  out.sup = evaluate(dmax, alpha);
  out.sup.hi += residue;  // dmax <= sup <= dmax + R_k(p)
  out.inf = evaluate(dmin, alpha);
  out.inf.lo -= residue;
  return out;
}

MpComplex delta_by_decomp(const RootSet& rs, FiboSequence& seq, const BigNat& n) {
  if (rs.k != seq.k()) throw std::invalid_argument("delta_by_decomp: k mismatch");
  Decomp d = zeckendorf(seq, n);
  MpComplex total = 0;
  for (std::uint32_t q : d.positions)
    for (unsigned i = 1; i < rs.k; ++i) total += rs.d[i] * complex_pow(rs.roots[i], q);
  return total;
}

namespace {

// value*2^128 in [hi:lo, hi:lo + 2]; valid for values in [0,1)
struct Mant128 {
  std::uint64_t hi = 0, lo = 0;
};

Mant128 mant128_from(const RationalInterval& iv) {
  FixedPointBracket b(iv, 128);
  BigNat m = b.mantissa();
  Mant128 out;
  BigNat lo_part, hi_part;
  mpz_fdiv_r_2exp(lo_part.get_mpz_t(), m.get_mpz_t(), 64);
  mpz_fdiv_q_2exp(hi_part.get_mpz_t(), m.get_mpz_t(), 64);
  out.lo = mpz_get_ui(lo_part.get_mpz_t());
  out.hi = mpz_get_ui(hi_part.get_mpz_t());
  return out;
}

struct Floor128Result {
  bool ok = false;
  std::uint64_t floor_val = 0;
  std::uint64_t frac_top = 0;  // top 64 bits of the lower-bound fraction
};

// floor(value * n) with the [m, m+2] bracket; n < 2^62
inline Floor128Result floor_mul128(Mant128 m, std::uint64_t n) {
  using u128 = unsigned __int128;
  u128 a = static_cast<u128>(m.hi) * n;  // contributes at limb 1..2
  u128 b = static_cast<u128>(m.lo) * n;  // contributes at limb 0..1
  std::uint64_t l0 = static_cast<std::uint64_t>(b);
  u128 mid = static_cast<u128>(static_cast<std::uint64_t>(a)) + static_cast<std::uint64_t>(b >> 64);
  std::uint64_t l1 = static_cast<std::uint64_t>(mid);
  std::uint64_t l2 = static_cast<std::uint64_t>(a >> 64) + static_cast<std::uint64_t>(mid >> 64);
  // upper bound: add 2n at limb 0
  u128 s0 = static_cast<u128>(l0) + 2 * n;
  u128 s1 = static_cast<u128>(l1) + static_cast<std::uint64_t>(s0 >> 64);
  std::uint64_t l2_up = l2 + static_cast<std::uint64_t>(s1 >> 64);
  Floor128Result r;
  r.ok = (l2 == l2_up);
  r.floor_val = l2;
  r.frac_top = l1;
  return r;
}

}  // namespace

CloitreReport cloitre_scan(unsigned k, std::uint64_t n_max) {
  if (k != 3 && k != 4) throw std::invalid_argument("cloitre_scan: requires k in {3,4}");
  if (n_max >= (1ull << 62)) throw std::invalid_argument("cloitre_scan: n_max too large");
  CloitreReport rep;
  rep.k = k;
  rep.n_max = n_max;

  HofstadterF f(k);
  f.warm_up(n_max);
  auto table = f.table();

  RationalInterval alpha = alpha_interval(k, pow2_rational(-130));
  Mant128 mant = mant128_from(alpha);

  for (std::uint64_t n = 0; n <= n_max; ++n) {
    Floor128Result fl = floor_mul128(mant, n);
    std::int64_t floor_val;
    if (fl.ok) {
      floor_val = static_cast<std::int64_t>(fl.floor_val);
    } else {
      // refine the bracket until the floor is unambiguous (cap 2^-2000)
      bool decided = false;
      std::int64_t v = 0;
      for (unsigned bits = 256; bits <= 2000; bits *= 2) {
        FixedPointBracket fb(alpha_interval(k, pow2_rational(-static_cast<long>(bits + 2))), bits);
        auto q = fb.floor_mul(BigNat(static_cast<unsigned long>(n)));
        if (q) {
          v = static_cast<std::int64_t>(to_uint64(*q));
          decided = true;
          break;
        }
      }
      if (!decided) {
        rep.ambiguous.push_back(n);
        continue;
      }
      floor_val = v;
    }
    std::int64_t diff = static_cast<std::int64_t>(table[n]) - floor_val;
    if (++rep.histogram[diff] == 1) rep.first_occurrence[diff] = n;
  }
  return rep;
}

std::int64_t additivity_defect(HofstadterF& f, std::uint64_t n, std::uint64_t m) {
  return static_cast<std::int64_t>(f.value(n + m)) - static_cast<std::int64_t>(f.value(n)) -
         static_cast<std::int64_t>(f.value(m));
}

AdditivityReport additivity_scan(unsigned k, std::uint64_t n_max) {
  AdditivityReport rep;
  rep.k = k;
  rep.n_max = n_max;
  HofstadterF f(k);
  f.warm_up(n_max);
  auto t = f.table();
  rep.most_positive = {0, 0, 0};
  rep.most_negative = {0, 0, 0};
  for (std::uint64_t s = 0; s <= n_max; ++s) {
    std::int64_t fs = static_cast<std::int64_t>(t[s]);
    for (std::uint64_t n = 0; n <= s / 2; ++n) {
      std::int64_t d = fs - static_cast<std::int64_t>(t[n]) - static_cast<std::int64_t>(t[s - n]);
      if (std::llabs(d) > rep.max_abs_defect) {
        rep.max_abs_defect = std::llabs(d);
        rep.first_max_abs = {n, s - n, d};
      }
      if (d > rep.most_positive.defect) rep.most_positive = {n, s - n, d};
      if (d < rep.most_negative.defect) rep.most_negative = {n, s - n, d};
    }
  }
  return rep;
}

namespace {

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double log_of_bignat(const BigNat& n) {
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

RationalInterval alpha_for_rendering(unsigned k, const BigNat& largest_b) {
  long extra = static_cast<long>(mpz_sizeinbase(largest_b.get_mpz_t(), 2));
  return alpha_interval(k, pow2_rational(-(80 + extra)));
}

}  // namespace

DivergenceK5Report divergence_probe_k5(unsigned n_max) {
  DivergenceK5Report rep;
  rep.n_max = n_max;
  FiboSequence seq(5);
  seq.at(6 * n_max + 4);

  std::vector<ExactAffine> du, dv;
  BigNat ua = 0, ub = 0, va = 0, vb = 0;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) {
      unsigned p = n - 1;
      ub += seq.at(6 * p);
      ua += seq.at(6 * p >= 1 ? 6 * p - 1 : 0);
      vb += seq.at(6 * p + 3);
      va += seq.at(6 * p + 2);
    }
    du.push_back({ua, ub, 5});
    dv.push_back({va, vb, 5});
  }

  RationalInterval alpha = alpha_for_rendering(5, vb > ub ? vb : ub);
  rep.first_above_two = n_max + 1;
  const Rational two(2);
  rep.increasing_from_3 = true;
  rep.decreasing_from_1 = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    rep.increasing.push_back({n, du[n].b, to_double(du[n], alpha)});
    rep.decreasing.push_back({n, dv[n].b, to_double(dv[n], alpha)});
    if (rep.first_above_two > n_max && compare(du[n], two) == Order::Greater)
      rep.first_above_two = n;
    if (n >= 3 && compare(du[n], du[n - 1]) != Order::Greater) rep.increasing_from_3 = false;
    if (n >= 1 && compare(dv[n], dv[n - 1]) != Order::Less) rep.decreasing_from_1 = false;
  }

  std::vector<double> xs, ys;
  for (unsigned n = n_max / 2; n <= n_max; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(rep.increasing[n].delta);
  }
  rep.slope = xs.size() >= 2 ? least_squares_slope(xs, ys) : 0.0;
  RootSet rs = compute_root_set(5);
  rep.slope_reference = 2 * static_cast<double>(rs.d[1].real());
  return rep;
}

DivergenceGeneralReport divergence_probe_general(unsigned k, unsigned p_max,
                                                 std::uint64_t scan_n_max) {
  if (k < 6) throw std::invalid_argument("divergence_probe_general: requires k >= 6");
  DivergenceGeneralReport rep;
  rep.k = k;
  rep.p_max = p_max;
  FiboSequence seq(k);
  seq.at(p_max);

  RationalInterval alpha = alpha_for_rendering(k, seq.at(p_max));
  const Rational one(1), minus_one(-1);
  double best = -1e300, worst = 1e300;
  double record = 0;
  std::vector<double> xs, ys;
  const unsigned fit_from = std::max(10u, p_max / 8);
  for (unsigned p = 0; p <= p_max; ++p) {
    ExactAffine d = delta_of_base(seq, p);
    double v = to_double(d, alpha);
    if (v > best) {
      best = v;
      rep.argmax_p = p;
    }
    if (v < worst) {
      worst = v;
      rep.argmin_p = p;
    }
    if (!rep.exceeds_plus_one && compare(d, one) == Order::Greater) rep.exceeds_plus_one = true;
    if (!rep.below_minus_one && compare(d, minus_one) == Order::Less) rep.below_minus_one = true;
    if (p >= 1 && std::abs(v) > record) {
      record = std::abs(v);
      if (p >= fit_from) {
        xs.push_back(log_of_bignat(seq.at(p)));
        ys.push_back(std::log(record));
      }
    }
  }
  rep.max_delta = best;
  rep.min_delta = worst;
  rep.exponent_fit = xs.size() >= 2 ? least_squares_slope(xs, ys) : 0.0;

  RootSet rs = compute_root_set(k);
  MpReal a = log(MpReal(abs(rs.roots[1]))) / log(MpReal(rs.roots[0].real()));
  rep.exponent_reference = static_cast<double>(a);

  // exhaustive scan: running extremes of delta_k(n) under the exact order
  rep.scan_n_max = scan_n_max;
  HofstadterF h(k);
  h.warm_up(scan_n_max);
  auto t = h.table();
  ExactAffine smax = delta(h, 0), smin = smax;
  for (std::uint64_t n = 1; n <= scan_n_max; ++n) {
    ExactAffine d{BigNat(static_cast<unsigned long>(t[n])), BigNat(static_cast<unsigned long>(n)),
                  k};
    if (compare(d, smax) == Order::Greater) {
      smax = d;
      rep.scan_argmax = n;
    }
    if (compare(d, smin) == Order::Less) {
      smin = d;
      rep.scan_argmin = n;
    }
  }
  rep.scan_max_delta = to_double(smax, alpha);
  rep.scan_min_delta = to_double(smin, alpha);
  return rep;
}

std::vector<FractalPoint> fractal_points(std::uint32_t n_max, bool shear) {
  HofstadterF f(3);
  if (n_max == 0) return {};
  f.warm_up(n_max - 1);
  auto t = f.table();
  MpReal a3 = alpha_value(3);
  std::vector<FractalPoint> pts;
  pts.reserve(n_max);
  for (std::uint32_t n = 0; n < n_max; ++n) {
    MpReal x = MpReal(t[n]) - a3 * n;
    MpReal y = MpReal(t[t[n]]) - a3 * MpReal(t[n]);
    if (shear) y += a3 * x;
    pts.push_back({n, static_cast<double>(x), static_cast<double>(y)});
  }
  return pts;
}

void write_fractal_csv(std::ostream& os, std::span<const FractalPoint> points) {
  os << "n,x,y\n";
  char buf[80];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g\n", p.n, p.x, p.y);
    os << buf;
  }
}

SecondIterateReport second_iterate_scan(std::uint64_t n_max) {
  if (n_max >= (1ull << 62)) throw std::invalid_argument("second_iterate_scan: n_max too large");
  SecondIterateReport rep;
  rep.n_max = n_max;
  HofstadterF f(3);
  f.warm_up(n_max);
  auto t = f.table();

  RationalInterval alpha = alpha_interval(3, pow2_rational(-140));
  RationalInterval alpha_sq = alpha * alpha;  // width ~2^-139, fine for 128 bits
  Mant128 mant = mant128_from(alpha_sq);

  // The value brackets as [d - (l1+2)/2^64, d - l1/2^64] with
  // d = F^2(n) - floor(alpha^2 n) and l1 the top limb of the fraction.
  // The bound comparisons are done in integers:
  //   v_hi <= 1.0393   <=>  (10000 d - 10393) 2^64 <= 10000 l1
  //   v_lo >= -0.7864  <=>  (10000 d + 7864) 2^64 >= 10000 (l1 + 2)
  using u128 = unsigned __int128;
  rep.within_bounds = true;
  rep.min_value = 1e300;
  rep.max_value = -1e300;
  const double inv64 = std::ldexp(1.0, -64);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::uint64_t f2 = t[t[n]];
    Floor128Result fl = floor_mul128(mant, n);
    std::int64_t floor_val;
    std::uint64_t frac_top;
    if (fl.ok) {
      floor_val = static_cast<std::int64_t>(fl.floor_val);
      frac_top = fl.frac_top;
    } else {
      // refine alpha^2 until the floor is decided; bound the value exactly
      bool decided = false;
      for (unsigned bits = 256; bits <= 2000; bits *= 2) {
        RationalInterval a = alpha_interval(3, pow2_rational(-static_cast<long>(bits + 4)));
        RationalInterval a2 = a * a;
        FixedPointBracket fb(a2, bits);
        auto q = fb.floor_mul(BigNat(static_cast<unsigned long>(n)));
        if (q) {
          floor_val = static_cast<std::int64_t>(to_uint64(*q));
          RationalInterval v = Rational(static_cast<unsigned long>(f2)) -
                               a2 * Rational(static_cast<unsigned long>(n));
          Rational hi_bound(10393, 10000), lo_bound(-7864, 10000);
          hi_bound.canonicalize();
          lo_bound.canonicalize();
          if (v.hi > hi_bound || v.lo < lo_bound) rep.within_bounds = false;
          std::int64_t dd = static_cast<std::int64_t>(f2) - floor_val;
          if (++rep.histogram[dd] == 1) rep.first_occurrence[dd] = n;
          double mid = v.mid().get_d();
          if (mid > rep.max_value) {
            rep.max_value = mid;
            rep.argmax = n;
          }
          if (mid < rep.min_value) {
            rep.min_value = mid;
            rep.argmin = n;
          }
          decided = true;
          break;
        }
      }
      if (!decided) throw std::runtime_error("second_iterate_scan: ambiguous floor at precision cap");
      continue;
    }
    std::int64_t d = static_cast<std::int64_t>(f2) - floor_val;
    if (++rep.histogram[d] == 1) rep.first_occurrence[d] = n;

    std::int64_t hi_num = 10000 * d - 10393;
    if (hi_num >= 0 &&
        (static_cast<u128>(hi_num) << 64) > static_cast<u128>(frac_top) * 10000)
      rep.within_bounds = false;
    std::int64_t lo_num = 10000 * d + 7864;
    if (lo_num < 0 ||
        (static_cast<u128>(lo_num) << 64) < (static_cast<u128>(frac_top) + 2) * 10000)
      rep.within_bounds = false;

    double v_hi = static_cast<double>(d) - static_cast<double>(frac_top) * inv64;
    double v_lo = v_hi - 2.0 * inv64;
    if (v_hi > rep.max_value) {
      rep.max_value = v_hi;
      rep.argmax = n;
    }
    if (v_lo < rep.min_value) {
      rep.min_value = v_lo;
      rep.argmin = n;
    }
  }
  return rep;
}

}  // namespace hofseq
