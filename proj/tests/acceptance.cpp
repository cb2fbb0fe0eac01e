// Acceptance suite: runs every shipped claim end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.
//
// usage: acceptance <path-to-cli>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hofseq/discrepancy.hpp"
#include "hofseq/words.hpp"

using json = nlohmann::json;
using namespace hofseq;

namespace {

std::string g_cli;
int g_failures = 0;

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

void criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (c.ok) {
    std::printf("[PASS] criterion %2d: %s (%lld ms)\n", number, title.c_str(),
                static_cast<long long>(ms));
  } else {
    std::printf("[FAIL] criterion %2d: %s -- %s\n", number, title.c_str(), c.detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 8192> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

RationalInterval parse_interval(const json& j) {
  return {parse_rational(j["lo"].get<std::string>()), parse_rational(j["hi"].get<std::string>())};
}

// --- criteria -------------------------------------------------------------

void certify_k3(Check& c) {
  int code = 0;
  json v = json::parse(run_cli("certify --k 3 --p 400", &code));
  c.expect(code == 0, "exit code");
  RationalInterval sup = parse_interval(v["sup"]), inf = parse_interval(v["inf"]);
  Rational tol = parse_rational("1e-12");
  c.expect(sup.width() <= tol, "sup width > 1e-12");
  c.expect(inf.width() <= tol, "inf width > 1e-12");
  c.expect(sup.distance_to(parse_rational("0.854187179928304")) <= tol, "sup misses d3+");
  c.expect(inf.distance_to(parse_rational("-0.708415898743967")) <= tol, "inf misses d3-");

  json f = json::parse(run_cli("certify --k 3 --p 400 --full", &code));
  c.expect(code == 0, "full run exit code");
  RationalInterval fsup = parse_interval(f["sup"]), finf = parse_interval(f["inf"]);
  Rational d3p = parse_rational("0.854187179928304211983581540152668");
  Rational d3m = parse_rational("-0.708415898743967960305146324178773");
  Rational tol33 = parse_rational("3e-33");
  c.expect(abs(fsup.lo - d3p) <= tol33 && abs(fsup.hi - d3p) <= tol33,
           "full sup not within 3e-33 of the 33-digit value");
  c.expect(abs(finf.lo - d3m) <= tol33 && abs(finf.hi - d3m) <= tol33,
           "full inf not within 3e-33 of the 33-digit value");
}

void certify_k4(Check& c) {
  int code = 0;
  json v = json::parse(run_cli("certify --k 4 --p 600", &code));
  c.expect(code == 0, "exit code");
  RationalInterval sup = parse_interval(v["sup"]), inf = parse_interval(v["inf"]);
  Rational tol = parse_rational("1e-10");
  c.expect(sup.width() <= tol, "sup width > 1e-10");
  c.expect(inf.width() <= tol, "inf width > 1e-10");
  c.expect(sup.distance_to(parse_rational("1.5834687793247475")) <= tol, "sup misses d4+");
  c.expect(inf.distance_to(parse_rational("-1.5060895457389591")) <= tol, "inf misses d4-");
}

void cloitre(Check& c) {
  CloitreReport r3 = cloitre_scan(3, 1'000'000);
  c.expect(r3.ambiguous.empty(), "k=3 ambiguous floors");
  for (auto& [d, cnt] : r3.histogram)
    c.expect(d == 0 || d == 1, "k=3 difference outside {0,1}: " + std::to_string(d));
  CloitreReport r4 = cloitre_scan(4, 1'000'000);
  c.expect(r4.ambiguous.empty(), "k=4 ambiguous floors");
  for (auto& [d, cnt] : r4.histogram)
    c.expect(d >= -1 && d <= 2, "k=4 difference outside {-1..2}: " + std::to_string(d));
  c.expect(r4.first_occurrence.at(2) == 120, "first diff 2 not at n=120");
  c.expect(r4.first_occurrence.at(-1) == 243, "first diff -1 not at n=243");
}

void cross_equivalence(Check& c) {
  for (unsigned k = 1; k <= 8; ++k) {
    HofstadterF h(k);
    FiboSequence seq(k);
    h.warm_up(100'000);
    auto t = h.table();
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
      if (f_by_shift(seq, n) != t[n]) {
        c.expect(false, "recursion/shift mismatch at k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
        return;
      }
    }
    if (k == 1) {
      for (std::uint64_t n = 0; n <= 100'000; ++n)
        if (t[n] != (n + 1) / 2) {
          c.expect(false, "k=1 ceiling mismatch at n=" + std::to_string(n));
          return;
        }
    }
    if (k == 2) {
      FixedPointBracket phi_inv(alpha_interval(2, pow2_rational(-130)), 128);
      for (std::uint64_t n = 0; n <= 100'000; ++n) {
        auto fl = phi_inv.floor_mul(BigNat(static_cast<unsigned long>(n + 1)));
        if (!fl || t[n] != to_uint64(*fl)) {
          c.expect(false, "k=2 golden-ratio floor mismatch at n=" + std::to_string(n));
          return;
        }
      }
    }
  }
}

void zeckendorf_properties(Check& c) {
  // round trip
  for (unsigned k = 1; k <= 6; ++k) {
    FiboSequence seq(k);
    for (unsigned long n = 0; n <= 10'000; ++n) {
      Decomp d = zeckendorf(seq, n);
      if (!d.is_canonical() || decomp_sum(seq, d) != n) {
        c.expect(false, "round trip failed at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        return;
      }
    }
  }
  // uniqueness oracle over position subsets {0..15}
  for (unsigned k = 1; k <= 5; ++k) {
    FiboSequence seq(k);
    std::map<BigNat, unsigned> counts;
    std::function<void(unsigned, BigNat)> enumerate = [&](unsigned next_min, BigNat sum) {
      ++counts[sum];
      for (unsigned p = next_min; p <= 15; ++p) enumerate(p + k, BigNat(sum + seq.at(p)));
    };
    enumerate(0, BigNat(0));
    for (auto& [n, cnt] : counts)
      if (n <= 5000 && cnt != 1) {
        c.expect(false, "duplicate canonical decomposition at k=" + std::to_string(k));
        return;
      }
    for (unsigned long n = 0; n <= 5000; ++n)
      if (BigNat(n) < seq.at(16) && !counts.count(BigNat(n))) {
        c.expect(false, "missing canonical decomposition at k=" + std::to_string(k));
        return;
      }
  }
  // successor oracle and flat rank
  for (unsigned k = 1; k <= 6; ++k) {
    FiboSequence seq(k);
    HofstadterF h(k);
    Decomp d = zeckendorf(seq, 0);
    for (unsigned long n = 0; n <= 10'000; ++n) {
      d = successor(d);
      if (d.positions != zeckendorf(seq, n + 1).positions) {
        c.expect(false, "successor mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        return;
      }
    }
    for (unsigned long n = 0; n <= 10'000; ++n) {
      Rank r = rank_of(seq, n);
      for (unsigned q = 0; q <= k; ++q) {
        bool flat = h.iterate(q, n + 1) == h.iterate(q, n);
        if (flat != r.less_than(q)) {
          c.expect(false, "flat-rank violation at k=" + std::to_string(k) +
                              ", n=" + std::to_string(n) + ", q=" + std::to_string(q));
          return;
        }
      }
    }
  }
}

void word_laws(Check& c) {
  for (unsigned k = 1; k <= 6; ++k) {
    FiboSequence seq(k);
    MorphicWord x(k);
    SubstImageCache cache(k);
    auto prefix = x.prefix(10'001);
    for (unsigned long n = 0; n <= 10'000; ++n) {
      Rank r = rank_of(seq, n);
      std::uint32_t expect =
          r.is_infinite() || r.value() + 1 >= k ? k : static_cast<std::uint32_t>(r.value() + 1);
      if (prefix[n] != expect) {
        c.expect(false, "letter/rank law fails at k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
        return;
      }
      Word w = word_of_decomp(zeckendorf(seq, n), cache);
      if (w.size() != n || !std::equal(w.begin(), w.end(), prefix.begin())) {
        c.expect(false, "decomposition word is not the prefix at k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
        return;
      }
    }
  }
}

void algebraic_suite(Check& c) {
  for (unsigned k = 2; k <= 12; ++k) {
    RootSet rs = compute_root_set(k, 128);
    for (unsigned p = 1; p < k; ++p) {
      MpComplex s = 0;
      for (auto& r : rs.roots) s += complex_pow(r, p);
      c.expect(static_cast<double>(abs(s - MpComplex(1))) <= 1e-10,
               "Newton sum off at k=" + std::to_string(k));
    }
    MpComplex prod = 1;
    for (auto& r : rs.roots) prod *= r;
    c.expect(static_cast<double>(abs(prod - MpComplex(k % 2 ? 1 : -1))) <= 1e-10,
             "product off at k=" + std::to_string(k));
    double m = static_cast<double>(abs(rs.roots[1]));
    if (k <= 4) c.expect(m < 1, "secondary modulus not < 1 at k=" + std::to_string(k));
    if (k == 5) c.expect(std::abs(m - 1) <= 1e-10, "secondary modulus not 1 at k=5");
    if (k >= 6) c.expect(m > 1, "secondary modulus not > 1 at k=" + std::to_string(k));
  }
  c.expect(coefficient_polynomial(compute_root_set(2, 160)) == std::vector<BigInt>{-1, -5, 5},
           "c-polynomial k=2");
  c.expect(coefficient_polynomial(compute_root_set(3, 160)) == std::vector<BigInt>{-1, -12, -31, 31},
           "c-polynomial k=3");
  c.expect(coefficient_polynomial(compute_root_set(4, 160)) ==
               std::vector<BigInt>{-1, -24, -162, -283, 283},
           "c-polynomial k=4");
}

void extrema_oracle(Check& c) {
  for (unsigned k = 1; k <= 5; ++k) {
    ExtremaTable t = extrema_table(k, 12);
    FiboSequence seq(k);
    HofstadterF h(k);
    for (unsigned p = 0; p <= 12; ++p) {
      std::uint64_t bound = to_uint64(seq.at(p));
      ExactAffine best = delta(h, 0), worst = delta(h, 0);
      for (std::uint64_t n = 1; n < bound; ++n) {
        ExactAffine d = delta(h, n);
        if (compare(d, best) == Order::Greater) best = d;
        if (compare(d, worst) == Order::Less) worst = d;
      }
      if (compare(best, t.dmax[p]) != Order::Equal ||
          compare(worst, t.dmin[p]) != Order::Equal) {
        c.expect(false, "table/brute-force mismatch at k=" + std::to_string(k) +
                            ", p=" + std::to_string(p));
        return;
      }
    }
  }
}

void divergence_probes(Check& c) {
  DivergenceK5Report r5 = divergence_probe_k5(120);
  c.expect(r5.first_above_two <= 120, "delta_5(u_n) never exceeded 2");
  c.expect(r5.increasing_from_3, "delta_5(u_n) not increasing from n=3");
  c.expect(r5.decreasing_from_1, "delta_5(u'_n) not decreasing");
  c.expect(std::abs(r5.slope - r5.slope_reference) <= 0.10 * std::abs(r5.slope_reference),
           "k=5 slope off by more than 10%");

  DivergenceGeneralReport r6 = divergence_probe_general(6, 400);
  c.expect(r6.exceeds_plus_one && r6.below_minus_one, "k=6 probe missed +-1 crossings");
  c.expect(std::abs(r6.exponent_fit - 0.1287) <= 0.03, "k=6 exponent fit off");
  DivergenceGeneralReport r7 = divergence_probe_general(7, 400);
  c.expect(std::abs(r7.exponent_fit - 0.2218) <= 0.03, "k=7 exponent fit off");
}

void almost_additivity(Check& c) {
  AdditivityReport r3 = additivity_scan(3, 300);
  c.expect(r3.max_abs_defect == 2, "k=3 max defect is not 2");
  HofstadterF h3(3);
  c.expect(std::llabs(additivity_defect(h3, 18, 78)) == 2, "witness (18,78) does not attain 2");
  AdditivityReport r4 = additivity_scan(4, 10'000);
  c.expect(r4.max_abs_defect <= 4, "k=4 defect above 4");
  AdditivityReport r1 = additivity_scan(1, 2000);
  AdditivityReport r2 = additivity_scan(2, 2000);
  c.expect(r1.max_abs_defect <= 1 && r2.max_abs_defect <= 1, "k=1,2 defect above 1");
}

void fractal_emission(Check& c) {
  int code = 0;
  std::string out1 = run_cli("fractal --nmax 10000", &code);
  c.expect(code == 0, "exit code");
  std::string out2 = run_cli("fractal --nmax 10000", &code);
  c.expect(out1 == out2, "output differs between runs");
  std::istringstream in(out1);
  std::string line;
  std::getline(in, line);
  c.expect(line == "n,x,y", "missing header");
  unsigned rows = 0;
  while (std::getline(in, line)) {
    double x = 0, y = 0;
    unsigned n = 0;
    if (std::sscanf(line.c_str(), "%u,%lf,%lf", &n, &x, &y) != 3) {
      c.expect(false, "bad CSV row: " + line);
      return;
    }
    c.expect(x >= -0.7085 && x <= 0.8542 && y >= -0.7085 && y <= 0.8542,
             "point outside the certified box: " + line);
    ++rows;
  }
  c.expect(rows == 10'000, "expected 10000 rows, got " + std::to_string(rows));
}

void second_iterate(Check& c) {
  SecondIterateReport rep = second_iterate_scan(1'000'000);
  c.expect(rep.within_bounds, "value left [-0.7864, 1.0393]");
  for (auto& [d, cnt] : rep.histogram)
    c.expect(d == 0 || d == 1 || d == 2, "floor difference outside {0,1,2}");
  c.expect(rep.first_occurrence.at(2) == 1235, "first difference 2 not at n=1235");
  double freq = static_cast<double>(rep.histogram.at(2)) / static_cast<double>(1'000'001);
  c.expect(freq >= 0.0005 && freq <= 0.0015, "difference-2 frequency outside 0.1% +- 0.05%");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "discrepancy certification k=3 (p=400, 1e-40 and --full)", certify_k3);
  criterion(2, "discrepancy certification k=4 (p=600)", certify_k4);
  criterion(3, "Cloitre conjectures to n=10^6", cloitre);
  criterion(4, "cross-implementation equivalence (k<=8, n<=10^5)", cross_equivalence);
  criterion(5, "Zeckendorf properties (round trip, uniqueness, successor, flat rank)",
            zeckendorf_properties);
  criterion(6, "word laws (prefix and letter/rank, n<=10^4, k<=6)", word_laws);
  criterion(7, "algebraic suite (Newton sums, trichotomy, coefficient polynomials)",
            algebraic_suite);
  criterion(8, "dmax/dmin brute-force oracle (k<=5, p<=12)", extrema_oracle);
  criterion(9, "divergence probes (k=5 linear drift, k=6,7 exponents)", divergence_probes);
  criterion(10, "almost additivity (k=3 defect 2 with witness, k=4 <= 4, k=1,2 <= 1)",
            almost_additivity);
  criterion(11, "fractal emission (10^4 points, in box, byte-identical)", fractal_emission);
  criterion(12, "second iterate scan (range, histogram, n=1235, 0.1% frequency)", second_iterate);

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
