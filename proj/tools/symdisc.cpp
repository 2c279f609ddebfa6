// Command-line surface: membership verdicts, interpolation-bound reports,
// the nonuniqueness family, and the randomized verification suites.
//
// Exit codes: 0 pass, 1 counterexample or internal contradiction,
// 2 parse/input error, 3 unsupported request (synthesis off the slice).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "symdisc/fuzz.hpp"
#include "symdisc/io.hpp"
#include "symdisc/nonuniqueness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

void emit(const symdisc::ReportFile& report, const std::string& out_path) {
  const std::string text = symdisc::to_json(report).dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw symdisc::error(symdisc::errc::parse_error, "cannot write '" + out_path + "'");
    out << text << "\n";
  }
}

symdisc::Cplx parse_cplx(const std::string& text) {
  double re = 0.0, im = 0.0;
  char extra = 0;
  const int got = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &extra);
  if (got == 2) return {re, im};
  if (std::sscanf(text.c_str(), "%lf%c", &re, &extra) == 1) return {re, 0.0};
  throw symdisc::error(symdisc::errc::parse_error, "expected 're,im' but got '" + text + "'");
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("SYMDISC_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return cli_seed;
}

/// Conditions with margins beyond the band must agree; the bidisc oracle is
/// held to its 1e-6 certification threshold.
bool tilde_conditions_contradict(const symdisc::MembershipVerdict& v) {
  static const char* kKeys[] = {"3", "3'", "4", "4'", "5", "5'", "6", "7"};
  int verdict = -1;
  for (const char* key : kKeys) {
    const auto& ce = v.condition_values.at(key);
    if (std::abs(ce.margin) <= symdisc::kMarginBand) continue;
    const int b = ce.margin > 0.0 ? 1 : 0;
    if (verdict == -1) verdict = b;
    else if (verdict != b) return true;
  }
  const double m2 = v.condition_values.at("2").margin;
  const double m4 = v.condition_values.at("4").margin;
  if (std::abs(m2) >= 1e-6 && std::abs(m4) > symdisc::kMarginBand && (m2 > 0.0) != (m4 > 0.0))
    return true;
  return false;
}

int run_membership(const std::string& point_path, const std::string& which,
                   const std::string& domain, const std::string& out_path) {
  using namespace symdisc;
  const PointFile pf = load_point_file(point_path);
  const Closure closure = (which == "open") ? Closure::open : Closure::closed;

  ReportFile report;
  report.command = "membership";
  report.inputs = {{"point", to_json(pf)}, {"which", which}, {"domain", domain}};

  bool contradiction = false;
  if (domain == "tilde") {
    const TildePoint y = as_tilde(pf);
    const MembershipVerdict v = membership_tilde(y, closure);
    report.results = to_json(v);
    report.results["member"] = (closure == Closure::open) ? v.member_open : v.member_closed;
    contradiction = tilde_conditions_contradict(v);
    report.results["contradiction"] = contradiction;
  } else {
    const SymPoint s = as_sym(pf);
    const MembershipVerdict v = membership_sym(s, closure);
    report.results = to_json(v);
    report.results["member"] = (closure == Closure::open) ? v.member_open : v.member_closed;
    report.results["contradiction"] = false;
  }
  emit(report, out_path);
  return contradiction ? kExitCounterexample : kExitOk;
}

int run_schwarz(const std::string& point_path, const std::string& lambda_str,
                const std::string& domain, bool synthesize, const std::string& out_path) {
  using namespace symdisc;
  const PointFile pf = load_point_file(point_path);
  const Cplx lambda0 = parse_cplx(lambda_str);

  TildePoint y;
  std::optional<SymPoint> sym_input;
  if (domain == "tilde") {
    y = as_tilde(pf);
  } else {
    const SymPoint s = as_sym(pf);
    sym_input = s;
    if (s.n < 2) throw error(errc::parse_error, "schwarz: need n >= 2");
    y = TildePoint{s.n, s.s, s.p};
  }

  const SchwarzDatum datum{lambda0, y};
  const SchwarzReport rep = schwarz_report(datum);

  ReportFile report;
  report.command = "schwarz";
  report.inputs = {{"point", to_json(pf)},
                   {"lambda0", to_json(lambda0)},
                   {"domain", domain},
                   {"synthesize", synthesize}};
  report.results = {{"report", to_json(rep)}};

  if (sym_input) {
    const CostaraBound cb = costara_schwarz_bound(lambda0, *sym_input);
    report.results["costara"] = {{"sup", cb.sup}, {"holds", cb.holds}};
  }

  if (synthesize) {
    if (!in_Jn(y)) {
      report.results["synthesis"] = {{"status", "not-in-slice"}};
      emit(report, out_path);
      std::cerr << "synthesis requires the proportional slice\n";
      return kExitUnsupported;
    }
    const Interpolant psi = synthesize_interpolant(datum);
    const auto at0 = psi(0.0);
    const auto atl = psi(lambda0);
    double r0 = 0.0, rl = 0.0;
    for (const Cplx& c : at0) r0 = std::max(r0, std::abs(c));
    for (int i = 0; i < y.n - 1; ++i)
      rl = std::max(rl, std::abs(atl[static_cast<std::size_t>(i)] - comp(y, i + 1)));
    rl = std::max(rl, std::abs(atl.back() - y.q));
    double worst_closed = std::numeric_limits<double>::infinity();
    for (const Cplx& l : disc_grid(8, 8, 0.999)) {
      const auto val = psi(l);
      TildePoint p{y.n, std::vector<Cplx>(val.begin(), val.end() - 1), val.back()};
      worst_closed = std::min(worst_closed, tilde_condition4_margin(p));
    }
    json vals = json::array();
    for (const Cplx& c : atl) vals.push_back(to_json(c));
    report.results["synthesis"] = {{"status", "ok"},
                                   {"residual_origin", r0},
                                   {"residual_target", rl},
                                   {"range_min_margin", worst_closed},
                                   {"value_at_lambda0", std::move(vals)}};
  }
  emit(report, out_path);
  return rep.consistent ? kExitOk : kExitCounterexample;
}

int run_nonuniqueness(int zeta_count, const std::string& out_path) {
  using namespace symdisc;
  if (zeta_count < 2)
    throw error(errc::parse_error, "nonuniqueness: --zeta-count must be at least 2");

  const Cplx probe{1.0 / 3.0, 0.0};
  std::vector<std::vector<Cplx>> probes;
  json members = json::array();
  for (int i = 0; i < zeta_count; ++i) {
    const Cplx zeta = std::polar(0.9, 2.0 * std::numbers::pi * i / zeta_count);
    const Interpolant psi = family_member(zeta);
    const auto at0 = psi(0.0);
    const auto atl = psi(worked::kLambda0);
    double r0 = 0.0;
    for (const Cplx& c : at0) r0 = std::max(r0, std::abs(c));
    const std::vector<Cplx> target{worked::kY1, worked::kY2, worked::kQ};
    double rl = 0.0;
    for (int k = 0; k < 3; ++k)
      rl = std::max(rl, std::abs(atl[static_cast<std::size_t>(k)] - target[static_cast<std::size_t>(k)]));
    const auto at_probe = psi(probe);
    probes.push_back(at_probe);
    json pj = json::array();
    for (const Cplx& c : at_probe) pj.push_back(to_json(c));
    members.push_back({{"zeta", to_json(zeta)},
                       {"residual_origin", r0},
                       {"residual_target", rl},
                       {"value_at_probe", std::move(pj)}});
  }
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < probes.size(); ++a)
    for (std::size_t b = a + 1; b < probes.size(); ++b) {
      double d = 0.0;
      for (int k = 0; k < 3; ++k) d += std::norm(probes[a][static_cast<std::size_t>(k)] -
                                                 probes[b][static_cast<std::size_t>(k)]);
      min_sep = std::min(min_sep, std::sqrt(d));
    }

  ReportFile report;
  report.command = "nonuniqueness";
  report.inputs = {{"zeta_count", zeta_count}, {"probe", to_json(probe)}};
  report.results = {{"members", std::move(members)}, {"min_pairwise_separation", min_sep}};
  emit(report, out_path);
  return kExitOk;
}

int run_fuzz(int n, int count, std::uint64_t seed, const std::string& suite,
             const std::string& out_path) {
  using namespace symdisc;
  if (n < 2 || n > 6) throw error(errc::parse_error, "fuzz: n must lie in [2, 6]");
  if (count < 0) throw error(errc::parse_error, "fuzz: count must be nonnegative");

  FuzzReport rep;
  if (suite == "thm22") rep = thm22_suite(n, count, seed);
  else if (suite == "thm37") rep = thm37_suite(n, count, seed);
  else if (suite == "lemma36") rep = lemma36_suite(count, seed);
  else if (suite == "lemma41") rep = lemma41_suite(count, seed);
  else rep = scaling_suite(count, seed);

  ReportFile report;
  report.command = "fuzz";
  report.inputs = {{"suite", suite}, {"n", n}, {"count", count}};
  report.seed = seed;
  report.results = to_json(rep);
  emit(report, out_path);
  return rep.pass() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symdisc: membership and two-point interpolation bounds for symmetrized-polydisc families"};
  app.require_subcommand(1);

  std::string point_path, out_path, which = "open", domain = "tilde", lambda_str;
  bool synthesize = false;
  int zeta_count = 16;
  int fuzz_n = 3, fuzz_count = 1000;
  std::uint64_t seed = 20250810ULL;
  std::string suite = "thm22";

  auto* mem = app.add_subcommand("membership", "Decide membership of a point");
  mem->add_option("point", point_path, "JSON point file")->required();
  mem->add_option("--which", which, "open or closed domain")
      ->check(CLI::IsMember({"open", "closed"}));
  mem->add_option("--domain", domain, "tilde or sym family")
      ->check(CLI::IsMember({"tilde", "sym"}));
  mem->add_option("--out", out_path, "write the report here instead of stdout");

  auto* sch = app.add_subcommand("schwarz", "Evaluate the two-point interpolation conditions");
  sch->add_option("point", point_path, "JSON point file")->required();
  sch->add_option("--lambda0", lambda_str, "interpolation node as re,im")->required();
  sch->add_option("--domain", domain, "tilde or sym family")
      ->check(CLI::IsMember({"tilde", "sym"}));
  sch->add_flag("--synthesize", synthesize, "construct the interpolant when available");
  sch->add_option("--out", out_path, "write the report here instead of stdout");

  auto* non = app.add_subcommand("nonuniqueness", "Distinct interpolants for the worked datum");
  non->add_option("--zeta-count", zeta_count, "number of family members (>= 2)");
  non->add_option("--out", out_path, "write the report here instead of stdout");

  auto* fz = app.add_subcommand("fuzz", "Randomized cross-validation suites");
  fz->add_option("--n", fuzz_n, "dimension, 2..6");
  fz->add_option("--count", fuzz_count, "number of samples");
  fz->add_option("--seed", seed, "RNG seed (SYMDISC_SEED overrides)");
  fz->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember({"thm22", "thm37", "lemma36", "lemma41", "scaling"}));
  fz->add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (mem->parsed()) return run_membership(point_path, which, domain, out_path);
    if (sch->parsed()) return run_schwarz(point_path, lambda_str, domain, synthesize, out_path);
    if (non->parsed()) return run_nonuniqueness(zeta_count, out_path);
    return run_fuzz(fuzz_n, fuzz_count, effective_seed(seed), suite, out_path);
  } catch (const symdisc::error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == symdisc::errc::not_in_jn) return kExitUnsupported;
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
