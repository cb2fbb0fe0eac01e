#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "hofseq/algebraic.hpp"
#include "hofseq/exact_affine.hpp"
#include "hofseq/fk.hpp"
#include "hofseq/numeration.hpp"

namespace hofseq {

/// delta_k(n) = F_k(n) - alpha_k n as the exact pair (F_k(n), n).
ExactAffine delta(HofstadterF& f, std::uint64_t n);

/// Same through the numeration system (works for arbitrarily large n).
ExactAffine delta(FiboSequence& seq, const BigNat& n);

/// delta_k(A_{k,p}) = (A_{k,p ominus 1}, A_{k,p}).
ExactAffine delta_of_base(FiboSequence& seq, unsigned p);

/// Exact running extrema of delta_k over n < A_{k,p}:
///   dmax[p] = max(dmax[p-1], dmax[p ominus k] + delta(A_{k,p-1}))
/// and dually for dmin; dmax[0] = dmin[0] = 0. All maxima decided by the
/// exact compare; floats never enter.
struct ExtremaTable {
  unsigned k = 0;
  std::vector<ExactAffine> dmax, dmin;
};
ExtremaTable extrema_table(unsigned k, unsigned p_max);

/// Certified enclosures of sup_n delta_k(n) and inf_n delta_k(n) for
/// k in {3,4}: dmax/dmin rendered against a certified alpha bracket and
/// widened by the certified residue bound. alpha_eps is the target width
/// of the rendered dmax/dmin enclosures (the alpha bracket is refined to
/// alpha_eps / (b+1) internally).
struct CertifiedBounds {
  unsigned k = 0, p = 0;
  RationalInterval sup, inf;
  Rational residue;
};
CertifiedBounds certify_bounds(unsigned k, unsigned p, const Rational& alpha_eps);

/// delta_k(n) = sum_{q in D_k(n)} sum_{i>=1} d_i r_i^q (float route).
MpComplex delta_by_decomp(const RootSet& rs, FiboSequence& seq, const BigNat& n);

/// F_k(n) - floor(alpha_k n) over n <= n_max with certified floors
/// (the alpha bracket is refined until each floor is unambiguous; an n
/// still ambiguous at a 2^-2000 bracket is reported, never guessed).
struct CloitreReport {
  unsigned k = 0;
  std::uint64_t n_max = 0;
  std::map<std::int64_t, std::uint64_t> histogram;
  std::map<std::int64_t, std::uint64_t> first_occurrence;
  std::vector<std::uint64_t> ambiguous;
};
CloitreReport cloitre_scan(unsigned k, std::uint64_t n_max);

/// Additivity defect scan: extremes of F_k(n+m) - F_k(n) - F_k(m) over
/// n + m <= n_max, with witnesses (first by sum, then by n).
struct AdditivityWitness {
  std::uint64_t n = 0, m = 0;
  std::int64_t defect = 0;
};
struct AdditivityReport {
  unsigned k = 0;
  std::uint64_t n_max = 0;
  std::int64_t max_abs_defect = 0;
  AdditivityWitness first_max_abs;
  AdditivityWitness most_positive, most_negative;
};
AdditivityReport additivity_scan(unsigned k, std::uint64_t n_max);
std::int64_t additivity_defect(HofstadterF& f, std::uint64_t n, std::uint64_t m);

/// Divergence probe for k = 5 along u_n = sum_{p<n} A_{5,6p} and
/// u'_n = sum_{p<n} A_{5,6p+3}. The probe values are exact pairs; the
/// report renders them to floats and fits the linear drift, whose slope
/// should match 2 Re d_{5,1}.
struct ProbeRow {
  unsigned n = 0;
  BigNat u;
  double delta = 0;
};
struct DivergenceK5Report {
  unsigned n_max = 0;
  std::vector<ProbeRow> increasing, decreasing;
  unsigned first_above_two = 0;  // n_max + 1 when never reached
  bool increasing_from_3 = false;
  bool decreasing_from_1 = false;
  double slope = 0, slope_reference = 0;
};
DivergenceK5Report divergence_probe_k5(unsigned n_max);

/// Divergence probe for k >= 6: exact extremes of delta_k(A_{k,p}) for
/// p <= p_max, extremes over an exhaustive scan of n <= scan_n_max, and the
/// empirical growth exponent of the record values against n^a with
/// a = ln|r_{k,1}| / ln beta_k.
struct DivergenceGeneralReport {
  unsigned k = 0, p_max = 0;
  double max_delta = 0, min_delta = 0;
  unsigned argmax_p = 0, argmin_p = 0;
  bool exceeds_plus_one = false, below_minus_one = false;  // exact comparisons
  double exponent_fit = 0, exponent_reference = 0;
  std::uint64_t scan_n_max = 0;
  double scan_max_delta = 0, scan_min_delta = 0;
  std::uint64_t scan_argmax = 0, scan_argmin = 0;
};
DivergenceGeneralReport divergence_probe_general(unsigned k, unsigned p_max,
                                                 std::uint64_t scan_n_max = 100'000);

/// The point cloud (delta_3(n), delta_3(F_3(n))) for n < n_max; with shear,
/// the second coordinate becomes delta_3(F_3(n)) + alpha_3 delta_3(n),
/// i.e. F_3^2(n) - alpha_3^2 n.
struct FractalPoint {
  std::uint32_t n = 0;
  double x = 0, y = 0;
};
std::vector<FractalPoint> fractal_points(std::uint32_t n_max, bool shear = false);
void write_fractal_csv(std::ostream& os, std::span<const FractalPoint> points);

/// Scan of F_3^2(n) - alpha_3^2 n: certified range check against
/// [-0.7864, 1.0393] and the floor-difference histogram (values in {0,1,2}).
struct SecondIterateReport {
  std::uint64_t n_max = 0;
  double min_value = 0, max_value = 0;
  std::uint64_t argmin = 0, argmax = 0;
  bool within_bounds = false;
  std::map<std::int64_t, std::uint64_t> histogram;
  std::map<std::int64_t, std::uint64_t> first_occurrence;
};
SecondIterateReport second_iterate_scan(std::uint64_t n_max);

}  // namespace hofseq
