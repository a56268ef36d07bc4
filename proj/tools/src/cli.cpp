#include "lclc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lclc/lclc.hpp"

namespace lclc::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr const char* kDefaultTGrid = "0.1,0.25,0.5,1,2,4";
constexpr const char* kDefaultQGrid = "0.5,1,1.5,3,5,inf";
constexpr const char* kDefaultOrders = "0,0.5,1,2,inf";

const std::vector<std::pair<std::string, Command>>& command_table() {
  static const std::vector<std::pair<std::string, Command>> table{
      {"verify", Command::Verify},
      {"entropy", Command::Entropy},
      {"varentropy", Command::Varentropy},
      {"phi", Command::Phi},
      {"crossing", Command::Crossing},
      {"match", Command::Match},
      {"concentration", Command::Concentration},
      {"constants", Command::Constants},
      {"counterexample", Command::Counterexample},
      {"epi", Command::Epi},
  };
  return table;
}

class Params {
 public:
  explicit Params(const RunConfig& cfg) : cfg_(cfg) {}

  std::optional<std::string> text(const std::string& key) const {
    auto it = cfg_.parameters.find(key);
    if (it == cfg_.parameters.end()) return std::nullopt;
    return it->second;
  }
  double number(const std::string& key, double fallback) const {
    auto t = text(key);
    return t ? parse_number(*t) : fallback;
  }
  double required_number(const std::string& key) const {
    auto t = text(key);
    if (!t) throw UsageError("missing required parameter --" + key);
    return parse_number(*t);
  }
  std::vector<double> list(const std::string& key, const std::string& fallback) const {
    return parse_number_list(text(key).value_or(fallback));
  }
  double tail_tol() const { return number("tail-tol", kDefaultTailTol); }

 private:
  const RunConfig& cfg_;
};

Distribution resolve_distribution(const RunConfig& cfg, const Params& params) {
  if (cfg.input_path) return load_distribution(*cfg.input_path);
  if (auto law = params.text("law")) {
    const double lambda = params.required_number("lambda");
    if (*law == "geometric") return ParametricLaw::geometric(lambda);
    if (*law == "symmetric_geometric") return ParametricLaw::symmetric_geometric(lambda);
    throw UsageError("unknown --law '" + *law + "' (expected geometric or symmetric_geometric)");
  }
  throw UsageError("this command needs --input PATH or --law NAME --lambda X");
}

const ParametricLaw* as_law(const Distribution& d) { return std::get_if<ParametricLaw>(&d); }

std::string order_text(double v) { return std::isinf(v) ? "inf" : format_number(v); }

CheckReport info_row(std::string name, double value) {
  return CheckReport{std::move(name), value, 0.0, 0.0, Verdict::NotApplicable, {}, {}};
}

CheckReport not_applicable(std::string name, std::string reason) {
  CheckReport r{std::move(name), 0.0, 0.0, 0.0, Verdict::NotApplicable, {}, {}};
  r.with("reason", std::move(reason));
  return r;
}

bool monotone_lc(const StructureReport& s) { return s.log_concave && is_monotone(s.direction); }
bool half_symmetric_lc(const StructureReport& s) {
  return s.log_concave && s.center && !s.integer_center;
}
bool integer_symmetric_lc(const StructureReport& s) {
  return s.log_concave && s.center && s.integer_center;
}

CheckReport concavity_report(const LatticePMF& x, const StructureReport& s) {
  const ConcavityReport c = check_concavity(x);
  const bool applicable = monotone_lc(s) || half_symmetric_lc(s);
  const double worst = std::max(c.max_phi_second, c.max_slope_change);
  CheckReport r{"phi_concavity", worst, kConcavityTol, kConcavityTol - worst,
                applicable ? (c.concave ? Verdict::Pass : Verdict::Fail) : Verdict::NotApplicable,
                {}, {}};
  r.with("max_phi_second", c.max_phi_second)
      .with("max_slope_change", c.max_slope_change)
      .with("concave", c.concave ? "true" : "false");
  if (c.witness) r.with("witness_t", (*c.witness)[1]);
  if (!applicable) r.with("reason", "concavity is only guaranteed for monotone log-concave x");
  return r;
}

CheckReport varentropy_report(const Distribution& d, const LatticePMF& x) {
  if (const auto* law = as_law(d)) return check_varentropy(*law);
  try {
    return check_varentropy(x);
  } catch (const Error& e) {
    if (e.code() != Errc::Unclassified) throw;
    return not_applicable("varentropy_bound", e.what());
  }
}

std::vector<CheckReport> renyi_gap_reports(const Distribution& d, const LatticePMF& x) {
  const std::vector<std::pair<double, double>> pairs{{2.0, 1.0}, {kInf, 1.0}, {3.0, 1.5}};
  std::vector<CheckReport> out;
  for (auto [p, q] : pairs) {
    if (const auto* law = as_law(d)) {
      out.push_back(check_renyi_gap(*law, RenyiOrder(p), RenyiOrder(q)));
    } else {
      out.push_back(check_renyi_gap(x, RenyiOrder(p), RenyiOrder(q)));
    }
  }
  return out;
}

double concentration_K(const StructureReport& s) {
  if (monotone_lc(s) || half_symmetric_lc(s)) return 1.0;
  if (integer_symmetric_lc(s)) return sup_varentropy_symmetric().value;
  return 0.0;
}

std::vector<CheckReport> epi_reports(const Distribution& d, const LatticePMF& x,
                                     std::span<const double> alphas) {
  std::vector<CheckReport> out;
  for (double a : alphas) {
    if (const auto* law = as_law(d)) {
      out.push_back(epi_reversal_check(*law, RenyiOrder(a)));
    } else {
      out.push_back(epi_reversal_check(x, RenyiOrder(a)));
    }
  }
  return out;
}

CheckReport identity_report(const Distribution& d, const LatticePMF& x) {
  if (const auto* law = as_law(d); law && law->kind() == LawKind::Geometric) {
    // X - Y is symmetric geometric with the same λ.
    const double lhs = renyi_geometric(law->lambda(), RenyiOrder(2.0));
    const double rhs = renyi_symmetric_geometric(law->lambda(), RenyiOrder::infinity());
    const double diff = std::abs(lhs - rhs);
    CheckReport r{"h2_hinf_identity", lhs, rhs, -diff,
                  diff <= 1e-12 ? Verdict::Pass : Verdict::Fail, {}, {}};
    r.with("lambda", law->lambda());
    return r;
  }
  return h2_hinf_identity_check(x);
}

// Matching, crossing, layer cake and convex order for one distribution at order p.
std::vector<CheckReport> majorization_reports(const LatticePMF& x, const StructureReport& s,
                                              double p) {
  std::vector<CheckReport> out;
  if (s.support_size < 2) {
    out.push_back(not_applicable("crossing.sign_pattern", "point mass"));
    return out;
  }
  if (integer_symmetric_lc(s) && !is_monotone(s.direction)) {
    out.push_back(fold_symmetric(x).report);
    out.push_back(cake_layer_check(x, std::max(p, 1.0)));
    return out;
  }
  if (!monotone_lc(s)) {
    out.push_back(not_applicable("crossing.sign_pattern", "x is not monotone log-concave"));
    return out;
  }
  if (!(p > 1.0)) throw UsageError("crossing needs --p > 1");
  const LatticePMF dec = s.direction == Direction::Increasing ? x.reflected() : x;
  const MatchResult m = match_geometric(dec, p);
  out.push_back(crossing_verify(dec, GeometricComparator::probability(m.lambda)));
  out.back().with("p", p).with("lambda", m.lambda);
  out.push_back(cake_layer_check(dec, p));

  const LatticePMF z = materialize(ParametricLaw::geometric(m.lambda));
  const PowerDensity v = power_transform_density(LevelCount(dec), p - 1.0);
  const PowerDensity u = power_transform_density(LevelCount(z), p - 1.0);
  try {
    CheckReport co = convex_order_check(v, u, {}, 1e-9);
    co.name = "convex_order.comparator_majorizes";
    co.with("p", p);
    out.push_back(std::move(co));
  } catch (const Error& e) {
    if (e.code() != Errc::MeanMismatch) throw;
    CheckReport co = not_applicable("convex_order.comparator_majorizes", e.what());
    co.verdict = Verdict::Fail;
    out.push_back(std::move(co));
  }
  return out;
}

CheckReport k_constant_report(const Distribution& d, const LatticePMF& x, const StructureReport& s) {
  if (!(monotone_lc(s) || half_symmetric_lc(s)) && !as_law(d)) {
    return not_applicable("k_constant", "K < 1 is only asserted for monotone log-concave x");
  }
  const auto grid = default_alpha_grid();
  double k = 0.0;
  double bound = 1.0;
  if (const auto* law = as_law(d)) {
    k = K_constant(*law, grid);
    if (law->kind() == LawKind::SymmetricGeometric) bound = sup_varentropy_symmetric().value;
  } else {
    k = K_constant(x, grid);
  }
  CheckReport r{"k_constant", k, bound, bound - k, verdict_from_margin(bound - k, 1e-12), {}, {}};
  r.with("alpha_points", static_cast<double>(grid.size()));
  return r;
}

std::vector<CheckReport> dominance_reports(const LatticePMF& x, const StructureReport& s, double p,
                                           std::span<const double> q_grid) {
  if (s.support_size < 2) return {not_applicable("renyi_dominance", "point mass")};
  if (!(monotone_lc(s) || integer_symmetric_lc(s))) {
    return {not_applicable("renyi_dominance", "x is neither monotone nor integer-symmetric log-concave")};
  }
  return {renyi_dominance_report(x, p, q_grid)};
}

std::vector<CheckReport> concentration_reports(const LatticePMF& x, const StructureReport& s,
                                               const Params& params, bool sampled) {
  const double K = concentration_K(s);
  if (!(K > 0.0)) {
    return {not_applicable("concentration", "x is neither monotone nor symmetric log-concave")};
  }
  const auto grid = params.list("t-grid", kDefaultTGrid);
  std::vector<CheckReport> out{concentration_check(x, grid, K)};
  if (sampled) {
    const auto seed = static_cast<std::uint64_t>(params.number("seed", 0));
    const auto count = static_cast<std::size_t>(params.number("samples", 100000));
    if (count == 0) throw UsageError("--samples must be positive");
    out.push_back(sampled_concentration_check(x, grid, K, seed, count));
  }
  return out;
}

std::vector<CheckReport> run_verify(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = to_pmf(d, params.tail_tol());
  const StructureReport s = classify(x);
  const std::string suite = params.text("suite").value_or("all");
  const std::vector<std::string> known{"lyapunov", "varentropy", "renyi",  "mean_mode",
                                       "concentration", "epi", "identity", "dominance",
                                       "majorization", "constants"};
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = known;
  } else {
    std::stringstream ss(suite);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (std::find(known.begin(), known.end(), item) == known.end()) {
        throw UsageError("unknown suite '" + item + "'");
      }
      selected.push_back(item);
    }
  }
  auto has = [&](const char* name) {
    return std::find(selected.begin(), selected.end(), name) != selected.end();
  };
  const double p = params.number("p", 2.0);
  const auto q_grid = params.list("q", kDefaultQGrid);

  std::vector<CheckReport> out{to_report(s)};
  auto append = [&](std::vector<CheckReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  if (has("lyapunov")) out.push_back(concavity_report(x, s));
  if (has("varentropy")) out.push_back(varentropy_report(d, x));
  if (has("renyi")) append(renyi_gap_reports(d, x));
  if (has("mean_mode")) out.push_back(mean_mode_check(x));
  if (has("concentration")) append(concentration_reports(x, s, params, false));
  if (has("epi")) {
    const std::vector<double> alphas{2.0, kInf};
    append(epi_reports(d, x, alphas));
  }
  if (has("identity")) out.push_back(identity_report(d, x));
  if (has("dominance")) append(dominance_reports(x, s, p, q_grid));
  if (has("majorization")) append(majorization_reports(x, s, p));
  if (has("constants")) {
    out.push_back(k_constant_report(d, x, s));
    if (integer_symmetric_lc(s)) {
      out.push_back(check_renyi_spread(x, RenyiOrder::shannon(), RenyiOrder::infinity()));
    }
  }
  return out;
}

std::vector<CheckReport> run_entropy(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const auto* law = as_law(d);
  const LatticePMF x = law ? LatticePMF::dirac(0) : to_pmf(d);
  std::vector<CheckReport> out;
  for (double p : params.list("p", kDefaultOrders)) {
    const RenyiOrder order(p);
    CheckReport r = info_row("entropy.renyi", law ? renyi(*law, order) : renyi(x, order));
    r.with("p", order_text(p));
    out.push_back(std::move(r));
  }
  out.push_back(info_row("entropy.varentropy", law ? varentropy(*law) : varentropy(x)));
  return out;
}

std::vector<CheckReport> run_varentropy(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = to_pmf(d, params.tail_tol());
  return {varentropy_report(d, x)};
}

std::vector<CheckReport> run_phi(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = to_pmf(d, params.tail_tol());
  const auto* law = as_law(d);
  std::vector<CheckReport> out;
  for (double t : params.list("t-grid", kDefaultTGrid)) {
    if (!(t > 0.0)) throw UsageError("phi needs positive t values");
    CheckReport r = info_row("phi", law ? phi(*law, t) : phi(x, t));
    r.rhs = law ? phi_second_derivative(*law, t) : phi_second_derivative(x, t);
    r.with("t", t).with("rhs_is", "phi_second_derivative");
    out.push_back(std::move(r));
  }
  out.push_back(concavity_report(x, classify(x)));
  return out;
}

std::vector<CheckReport> run_crossing(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = to_pmf(d, params.tail_tol());
  return majorization_reports(x, classify(x), params.number("p", 2.0));
}

std::vector<CheckReport> run_match(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = to_pmf(d, params.tail_tol());
  const StructureReport s = classify(x);
  const double p = params.number("p", 2.0);
  const LawKind kind = comparator_kind(x);
  const MatchResult m =
      kind == LawKind::Geometric ? match_geometric(x, p) : match_symmetric_geometric(x, p);
  CheckReport r{"match", m.lambda, m.target, -m.residual,
                m.residual < 1e-12 ? Verdict::Pass : Verdict::Fail, {}, {}};
  r.with("p", p)
      .with("comparator", kind == LawKind::Geometric ? "geometric" : "symmetric_geometric")
      .with("iterations", static_cast<double>(m.iterations))
      .with("bracket_width", m.bracket_width);
  std::vector<CheckReport> out{r};
  for (auto& rep : dominance_reports(x, s, p, params.list("q", kDefaultQGrid))) {
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CheckReport> run_concentration(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = to_pmf(d, params.tail_tol());
  return concentration_reports(x, classify(x), params, true);
}

std::vector<CheckReport> run_constants(const Params& params) {
  const std::string which = params.text("which").value_or("all");
  if (which != "all" && which != "vs" && which != "c" && which != "gap") {
    throw UsageError("--which must be one of vs, c, gap, all");
  }
  std::vector<CheckReport> out;
  if (which == "all" || which == "vs") {
    const auto vs = sup_varentropy_symmetric();
    CheckReport r = info_row("constants.V_S", vs.value);
    r.with("lambda_star", vs.lambda_star);
    out.push_back(std::move(r));
  }
  if (which == "all" || which == "c") {
    const double q = params.number("q", 1.0);
    const double p = params.number("p", kInf);
    CheckReport r = info_row("constants.C", C_constant(RenyiOrder(q), RenyiOrder(p)));
    r.with("q", order_text(q)).with("p", order_text(p));
    out.push_back(std::move(r));
  }
  if (which == "all" || which == "gap") {
    const double p = params.number("p", kInf);
    const double q = params.number("q", 1.0);
    CheckReport r = info_row("constants.gap", gap_constant(RenyiOrder(p), RenyiOrder(q)).value);
    r.with("p", order_text(p)).with("q", order_text(q));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> run_epi(const RunConfig& cfg, const Params& params) {
  const Distribution d = resolve_distribution(cfg, params);
  const LatticePMF x = as_law(d) ? LatticePMF::dirac(0) : to_pmf(d);
  const std::vector<double> alphas{params.number("alpha", 2.0)};
  return epi_reports(d, x, alphas);
}

}  // namespace

double parse_number(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t == "inf" || t == "+inf" || t == "infinity") return kInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw UsageError("cannot parse number '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse number '" + text + "'");
  }
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

StructureReport classify(const LatticePMF& x) {
  StructureReport s;
  s.log_concave = is_log_concave(x);
  s.direction = monotonicity(x);
  s.center = symmetry_center(x);
  s.integer_center = s.center && x.size() % 2 == 1;
  s.support_size = x.support_size();
  return s;
}

CheckReport to_report(const StructureReport& s) {
  static const char* const dir_names[] = {"increasing", "decreasing", "both", "neither"};
  CheckReport r{"structure", static_cast<double>(s.support_size), 0.0, 0.0,
                Verdict::NotApplicable, {}, {}};
  r.with("log_concave", s.log_concave ? "true" : "false")
      .with("direction", dir_names[static_cast<int>(s.direction)])
      .with("symmetry", !s.center ? "none" : (s.integer_center ? "integer" : "half_integer"));
  if (s.center) r.with("center", *s.center);
  return r;
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [n, c] : command_table()) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string to_string(Command c) {
  for (const auto& [n, cmd] : command_table()) {
    if (cmd == c) return n;
  }
  return "?";
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Discrete log-concave Lyapunov inequality verifier", "lclc"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string input;
  std::string out_path;
  std::string format = "csv";
  const std::vector<std::pair<std::string, std::string>> value_flags{
      {"law", "Parametric law: geometric or symmetric_geometric"},
      {"lambda", "Law parameter in (0,1); counterexample parameter"},
      {"p", "Order p, or a comma list of orders for entropy"},
      {"q", "Order q, or a comma list for dominance tables"},
      {"alpha", "Order for the difference-entropy check"},
      {"t-grid", "Comma list of t values"},
      {"seed", "Sampling seed"},
      {"samples", "Number of Monte Carlo draws"},
      {"tail-tol", "Tail mass dropped when truncating a parametric law"},
      {"suite", "all, or a comma list of verify suites"},
      {"which", "Constants to print: vs, c, gap or all"},
      {"gamma", "Counterexample scale"},
  };
  std::map<std::string, std::string> values;

  app.add_option("--input", input, "Distribution JSON file");
  app.add_option("--out", out_path, "Write report rows to this file");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  for (const auto& [flag, help] : value_flags) app.add_option("--" + flag, values[flag], help);

  const std::map<std::string, std::string> summaries{
      {"verify", "Run every applicable check"},
      {"entropy", "Renyi entropies and varentropy"},
      {"varentropy", "Varentropy against its class bound"},
      {"phi", "Phi and its second derivative on a t grid"},
      {"crossing", "Comparator crossing, layer cake and convex order"},
      {"match", "Matched comparator and dominance table"},
      {"concentration", "Exact and sampled information tails"},
      {"constants", "V_S, C(q,p) and gap constants"},
      {"counterexample", "Three-point concavity test of the extended functional"},
      {"epi", "Difference-entropy bound"},
  };
  for (const auto& [name, cmd] : command_table()) app.add_subcommand(name, summaries.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  if (!input.empty()) cfg.input_path = input;
  if (!out_path.empty()) cfg.out_path = out_path;
  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  for (const auto& [flag, help] : value_flags) {
    if (app.count("--" + flag) > 0) cfg.parameters[flag] = values[flag];
  }
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CheckReport> reports;
  const Params params(config);
  try {
    switch (config.command) {
      case Command::Verify: reports = run_verify(config, params); break;
      case Command::Entropy: reports = run_entropy(config, params); break;
      case Command::Varentropy: reports = run_varentropy(config, params); break;
      case Command::Phi: reports = run_phi(config, params); break;
      case Command::Crossing: reports = run_crossing(config, params); break;
      case Command::Match: reports = run_match(config, params); break;
      case Command::Concentration: reports = run_concentration(config, params); break;
      case Command::Constants: reports = run_constants(params); break;
      case Command::Counterexample:
        reports = {counterexample_check(params.required_number("lambda"),
                                        params.number("gamma", 1.0))};
        break;
      case Command::Epi: reports = run_epi(config, params); break;
    }
  } catch (const UsageError& e) {
    err << "lclc " << to_string(config.command) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "lclc " << to_string(config.command) << ": " << e.what() << '\n';
    return kExitUsage;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path);
    if (!file) {
      err << "lclc: cannot write " << config.out_path->string() << '\n';
      return kExitUsage;
    }
    write_reports(file, reports, config.output_format);
  } else {
    write_reports(out, reports, config.output_format);
  }
  const bool any_failed =
      std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) {
        return r.failed() || combine(r.rows) == Verdict::Fail;
      });
  return any_failed ? kExitCheckFailed : kExitOk;
}

}  // namespace lclc::cli
