// Command-line surface for the F_k / numeration / discrepancy library.
// Exit codes: 0 success, 1 invariant violation, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "hofseq/algebraic.hpp"
#include "hofseq/discrepancy.hpp"
#include "hofseq/fk.hpp"
#include "hofseq/numeration.hpp"
#include "hofseq/words.hpp"

using json = nlohmann::ordered_json;
using namespace hofseq;

namespace {

struct Config {
  unsigned k = 2;
  unsigned precision_bits = 128;
  std::string alpha_eps = "1e-40";
  std::string format;  // per-subcommand default when empty
  unsigned digits = 40;
  bool full = false;
};

constexpr std::uint64_t kCrossCheckCap = 10'000'000;

json interval_json(const RationalInterval& iv, unsigned digits) {
  return json{{"lo", decimal_string(iv.lo, digits, RoundDir::Down)},
              {"hi", decimal_string(iv.hi, digits, RoundDir::Up)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_eval(const Config& cfg, const std::string& n_text, unsigned iter) {
  BigNat n(n_text);
  FiboSequence seq(cfg.k);
  BigNat f_val = n;
  for (unsigned j = 0; j < iter; ++j) f_val = f_by_shift(seq, f_val);
  BigNat l_val = l_by_shift(seq, n, 1);

  if (fits_uint64(n) && to_uint64(n) <= kCrossCheckCap) {
    HofstadterF f(cfg.k);
    std::uint64_t n64 = to_uint64(n);
    std::uint64_t f_rec = f.iterate(iter, n64);
    std::uint64_t l_rec = f.right_adjoint(n64);
    if (BigNat(static_cast<unsigned long>(f_rec)) != f_val ||
        BigNat(static_cast<unsigned long>(l_rec)) != l_val)
      throw std::runtime_error("recursion and numeration routes disagree at k=" +
                               std::to_string(cfg.k) + ", n=" + n_text);
  }

  if (cfg.format == "json") {
    emit(json{{"k", cfg.k},
              {"n", n_text},
              {"iter", iter},
              {"f", f_val.get_str()},
              {"l", l_val.get_str()}});
  } else {
    std::string power = iter == 1 ? "" : "^" + std::to_string(iter);
    std::cout << "F_" << cfg.k << power << "(" << n_text << ") = " << f_val.get_str() << "\n";
    std::cout << "L_" << cfg.k << "(" << n_text << ") = " << l_val.get_str() << "\n";
  }
  return 0;
}

int run_seq(const Config& cfg, unsigned p) {
  FiboSequence seq(cfg.k);
  seq.at(p);
  if (cfg.format == "json") {
    json values = json::array();
    for (unsigned i = 0; i <= p; ++i) values.push_back(seq.at(i).get_str());
    emit(json{{"k", cfg.k}, {"p", p}, {"values", values}});
  } else {
    for (unsigned i = 0; i <= p; ++i) std::cout << seq.at(i).get_str() << "\n";
  }
  return 0;
}

int run_decomp(const Config& cfg, const std::string& n_text) {
  BigNat n(n_text);
  FiboSequence seq(cfg.k);
  Decomp d = zeckendorf(seq, n);
  Rank r = d.empty() ? Rank::infinity() : Rank::finite(d.positions.front());
  std::string digits = digit_string(d);
  if (cfg.format == "json") {
    json positions = json::array();
    for (auto p : d.positions) positions.push_back(p);
    json rank_j = r.is_infinite() ? json(nullptr) : json(r.value());
    emit(json{{"k", cfg.k},
              {"n", n_text},
              {"positions", positions},
              {"digits", digits},
              {"rank", rank_j}});
  } else {
    std::string pos;
    for (std::size_t i = 0; i < d.positions.size(); ++i)
      pos += (i ? "," : "") + std::to_string(d.positions[i]);
    std::cout << "positions: " << pos << "\n";
    std::cout << "digits: " << digits << "\n";
    std::cout << "rank: " << (r.is_infinite() ? std::string("infinity") : std::to_string(r.value()))
              << "\n";
  }
  return 0;
}

int run_word(const Config& cfg, std::uint64_t len) {
  MorphicWord w(cfg.k);
  auto pre = w.prefix(len);
  std::string text = render_word(pre);
  if (cfg.format == "json")
    emit(json{{"k", cfg.k}, {"length", len}, {"word", text}});
  else
    std::cout << text << "\n";
  return 0;
}

json complex_json(const MpComplex& z) {
  return json{{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

int run_roots(const Config& cfg) {
  RootSet rs = compute_root_set(cfg.k, cfg.precision_bits);
  Rational eps = parse_rational(cfg.alpha_eps);
  RationalInterval alpha = alpha_interval(cfg.k, eps);
  RationalInterval beta = beta_interval(cfg.k, eps);
  json roots = json::array(), cs = json::array(), ds = json::array();
  for (unsigned i = 0; i < rs.k; ++i) {
    json r = complex_json(rs.roots[i]);
    r["modulus"] = static_cast<double>(abs(rs.roots[i]));
    roots.push_back(r);
    cs.push_back(complex_json(rs.c[i]));
    ds.push_back(complex_json(rs.d[i]));
  }
  emit(json{{"k", cfg.k},
            {"precision_bits", cfg.precision_bits},
            {"alpha", interval_json(alpha, cfg.digits)},
            {"beta", interval_json(beta, cfg.digits)},
            {"roots", roots},
            {"c", cs},
            {"d", ds}});
  return 0;
}

int run_certify(const Config& cfg, unsigned p) {
  if (p == 0) p = cfg.k == 3 ? 400 : 600;
  Rational eps = parse_rational(cfg.full ? "1e-100" : cfg.alpha_eps);
  unsigned digits = cfg.full ? std::max(cfg.digits, 110u) : cfg.digits;
  CertifiedBounds b = certify_bounds(cfg.k, p, eps);
  emit(json{{"k", cfg.k},
            {"p", p},
            {"alpha_eps", cfg.full ? "1e-100" : cfg.alpha_eps},
            {"sup", interval_json(b.sup, digits)},
            {"inf", interval_json(b.inf, digits)},
            {"residue_bound", decimal_string(b.residue, 20, RoundDir::Up)}});
  return 0;
}

int run_conjecture(const Config& cfg, std::uint64_t n_max) {
  CloitreReport rep = cloitre_scan(cfg.k, n_max);
  json hist = json::object(), first = json::object();
  for (auto& [d, c] : rep.histogram) hist[std::to_string(d)] = c;
  for (auto& [d, n] : rep.first_occurrence) first[std::to_string(d)] = n;
  json amb = json::array();
  for (auto n : rep.ambiguous) amb.push_back(n);
  emit(json{{"k", cfg.k},
            {"n_max", n_max},
            {"histogram", hist},
            {"first_occurrence", first},
            {"ambiguous", amb}});
  return 0;
}

json witness_json(const AdditivityWitness& w) {
  return json{{"n", w.n}, {"m", w.m}, {"defect", w.defect}};
}

int run_additivity(const Config& cfg, std::uint64_t n_max) {
  AdditivityReport rep = additivity_scan(cfg.k, n_max);
  emit(json{{"k", cfg.k},
            {"n_max", n_max},
            {"max_abs_defect", rep.max_abs_defect},
            {"witness", witness_json(rep.first_max_abs)},
            {"most_positive", witness_json(rep.most_positive)},
            {"most_negative", witness_json(rep.most_negative)}});
  return 0;
}

int run_diverge(const Config& cfg, std::uint64_t n_max) {
  if (cfg.k == 5) {
    DivergenceK5Report rep = divergence_probe_k5(static_cast<unsigned>(n_max));
    auto rows = [](const std::vector<ProbeRow>& v) {
      json a = json::array();
      for (const auto& r : v)
        a.push_back(json{{"n", r.n}, {"u", r.u.get_str()}, {"delta", r.delta}});
      return a;
    };
    emit(json{{"k", 5},
              {"n_max", rep.n_max},
              {"first_above_two", rep.first_above_two},
              {"increasing_from_3", rep.increasing_from_3},
              {"decreasing_from_1", rep.decreasing_from_1},
              {"slope", rep.slope},
              {"slope_reference", rep.slope_reference},
              {"rows_increasing", rows(rep.increasing)},
              {"rows_decreasing", rows(rep.decreasing)}});
  } else {
    DivergenceGeneralReport rep = divergence_probe_general(cfg.k, static_cast<unsigned>(n_max));
    emit(json{{"k", cfg.k},
              {"p_max", rep.p_max},
              {"max_delta", rep.max_delta},
              {"argmax_p", rep.argmax_p},
              {"min_delta", rep.min_delta},
              {"argmin_p", rep.argmin_p},
              {"exceeds_plus_one", rep.exceeds_plus_one},
              {"below_minus_one", rep.below_minus_one},
              {"exponent_fit", rep.exponent_fit},
              {"exponent_reference", rep.exponent_reference},
              {"scan_n_max", rep.scan_n_max},
              {"scan_max_delta", rep.scan_max_delta},
              {"scan_argmax", rep.scan_argmax},
              {"scan_min_delta", rep.scan_min_delta},
              {"scan_argmin", rep.scan_argmin}});
  }
  return 0;
}

int run_second_iterate(std::uint64_t n_max) {
  SecondIterateReport rep = second_iterate_scan(n_max);
  json hist = json::object(), first = json::object();
  for (auto& [d, c] : rep.histogram) hist[std::to_string(d)] = c;
  for (auto& [d, n] : rep.first_occurrence) first[std::to_string(d)] = n;
  emit(json{{"n_max", rep.n_max},
            {"min_value", rep.min_value},
            {"argmin", rep.argmin},
            {"max_value", rep.max_value},
            {"argmax", rep.argmax},
            {"within_bounds", rep.within_bounds},
            {"histogram", hist},
            {"first_occurrence", first}});
  return 0;
}

int run_fractal(std::uint64_t n_max, bool shear, const std::string& out_path) {
  auto pts = fractal_points(static_cast<std::uint32_t>(n_max), shear);
  if (out_path.empty() || out_path == "-") {
    write_fractal_csv(std::cout, pts);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    write_fractal_csv(out, pts);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hofstadter F_k functions, Fibonacci-like numeration, and exact "
      "discrepancy certification"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Config cfg;
  app.add_option("--precision-bits", cfg.precision_bits, "working float precision in bits")
      ->envname("HOFSEQ_PRECISION_BITS")
      ->check(CLI::Range(64u, 224u));
  app.add_option("--alpha-eps", cfg.alpha_eps, "target precision for certified enclosures")
      ->envname("HOFSEQ_ALPHA_EPS");
  app.add_option("--digits", cfg.digits, "significant digits in decimal output")
      ->check(CLI::Range(6u, 200u));
  app.add_option("--format", cfg.format, "output format (text|json|csv)")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string n_text = "0", out_path;
  unsigned iter = 1, p_opt = 0;
  std::uint64_t n_max = 0, len = 0;
  bool shear = false;

  auto add_k = [&cfg](CLI::App* cmd, unsigned min_k = 1, unsigned max_k = 64) {
    cmd->add_option("--k", cfg.k, "nesting depth k")->required()->check(CLI::Range(min_k, max_k));
  };

  CLI::App* eval = app.add_subcommand("eval", "F_k^j(n) and L_k(n), both routes cross-checked");
  add_k(eval);
  eval->add_option("--n", n_text, "argument n (decimal)")->required();
  eval->add_option("--iter", iter, "iterate count j (default 1)");

  CLI::App* seq = app.add_subcommand("seq", "the base sequence A_{k,0..p}");
  add_k(seq);
  seq->add_option("--p", p_opt, "largest index")->required();

  CLI::App* dec = app.add_subcommand("decomp", "canonical decomposition, digits and rank");
  add_k(dec);
  dec->add_option("--n", n_text, "argument n (decimal)")->required();

  CLI::App* word = app.add_subcommand("word", "prefix of the substitution fixed point x_k");
  add_k(word);
  word->add_option("--len", len, "prefix length")->required();

  CLI::App* roots = app.add_subcommand("roots", "roots of X^k - X^{k-1} - 1 with coefficients");
  add_k(roots, 2u);

  CLI::App* cert = app.add_subcommand("certify", "certified sup/inf enclosures of the discrepancy");
  add_k(cert, 3u, 4u);
  cert->add_option("--p", p_opt, "table depth (default 400 for k=3, 600 for k=4)");
  cert->add_flag("--full", cfg.full, "full paper precision (alpha_eps 1e-100)");

  CLI::App* conj = app.add_subcommand("conjecture", "F_k(n) - floor(alpha_k n) histogram");
  add_k(conj, 3u, 4u);
  conj->add_option("--nmax", n_max, "scan bound")->required();

  CLI::App* addv = app.add_subcommand("additivity", "additivity defect scan with witnesses");
  add_k(addv);
  addv->add_option("--nmax", n_max, "bound on n+m")->required();

  CLI::App* div = app.add_subcommand("diverge", "divergence probes (k=5 and k>=6 variants)");
  add_k(div, 5u);
  div->add_option("--nmax", n_max, "probe length (terms for k=5, table depth for k>=6)")
      ->required();

  CLI::App* fract = app.add_subcommand("fractal", "point cloud (delta_3(n), delta_3(F_3(n))) as CSV");
  fract->add_option("--nmax", n_max, "number of points")->required();
  fract->add_flag("--shear", shear, "emit (x, y + alpha_3 x) instead");
  fract->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* iter2 = app.add_subcommand("second-iterate", "range and floor histogram of F_3^2(n) - alpha_3^2 n");
  iter2->add_option("--nmax", n_max, "scan bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return run_eval(cfg, n_text, iter);
    if (*seq) return run_seq(cfg, p_opt);
    if (*dec) return run_decomp(cfg, n_text);
    if (*word) return run_word(cfg, len);
    if (*roots) return run_roots(cfg);
    if (*cert) return run_certify(cfg, p_opt);
    if (*conj) return run_conjecture(cfg, n_max);
    if (*addv) return run_additivity(cfg, n_max);
    if (*div) return run_diverge(cfg, n_max);
    if (*fract) return run_fractal(n_max, shear, out_path);
    if (*iter2) return run_second_iterate(n_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
