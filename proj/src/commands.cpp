#include "cirldp/commands.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cirldp/batch.hpp"
#include "cirldp/cgf.hpp"
#include "cirldp/checks.hpp"
#include "cirldp/config.hpp"
#include "cirldp/errors.hpp"
#include "cirldp/functionals.hpp"
#include "cirldp/harness.hpp"
#include "cirldp/io.hpp"
#include "cirldp/rates.hpp"

namespace cirldp {

namespace {

struct Flags {
  std::optional<std::string> config;
  ConfigOverrides overrides;
  int precision = 6;

  // rate / cgf
  std::string which;
  std::optional<double> alpha, beta, x, y, z, t, v;
  bool grid = false;
  std::vector<double> alpha_range{3.0, 5.0};
  std::vector<double> beta_range{-4.0, -0.5};
  std::vector<double> range;
  std::size_t n_alpha = 41;
  std::size_t n_beta = 41;
  std::size_t n = 41;
  double lambda = 0.0, mu = 0.0, nu = 0.0, gamma = 0.0;
  std::string mode = "limit";

  // estimate / check
  std::vector<std::string> estimators;
  std::string suite;
  std::optional<double> tolerance;
  std::string functional = "S";
  double c = 5.0;
  std::vector<double> T_grid{5.0, 10.0, 20.0};
  int grid_size = 5;
  int random_points = 200;

  int fig = 1;
};

std::string fixed(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

double need(const std::optional<double>& v, const char* key) {
  if (!v) throw ConfigError(key, std::string("--") + key + " is required for this evaluation");
  return *v;
}

// Writes text to --out/<name> when an output directory is set, else to `out`.
void emit(const RunConfig& cfg, const std::string& name, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out / name, text);
    out << (cfg.out / name).string() << '\n';
  }
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.require_seed();
  if (cfg.out.empty() && cfg.n_paths > 1) throw ConfigError("out", "--out is required when simulating more than one path");
  const PathBatch batch{cfg.params, cfg.steps_per_unit, seed, cfg.n_paths};
  const auto paths = simulate_trajectories(batch, cfg.T);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::ostringstream csv;
    csv << std::setprecision(17);
    write_trajectory_csv(csv, paths[i]);
    std::ostringstream name;
    name << "path_" << std::setw(6) << std::setfill('0') << i << ".csv";
    emit(cfg, name.str(), csv.str(), out);
  }
  return kExitPass;
}

int cmd_estimate(const RunConfig& cfg, const Flags& fl, std::ostream& out) {
  const std::uint64_t seed = cfg.require_seed();
  std::vector<EstimatorKind> kinds;
  for (const auto& e : fl.estimators) kinds.push_back(parse_estimator(e));
  if (kinds.empty()) kinds = {EstimatorKind::mle, EstimatorKind::tilde, EstimatorKind::check, EstimatorKind::combined};
  const PathBatch batch{cfg.params, cfg.steps_per_unit, seed, cfg.n_paths};
  const auto paths = simulate_functionals(batch, {cfg.T}).front();
  std::vector<EstimateRow> rows;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (EstimatorKind k : kinds) rows.push_back({i, k, estimate(k, paths[i])});
  std::ostringstream csv;
  write_estimates_csv(csv, rows);
  emit(cfg, "estimates.csv", csv.str(), out);
  return kExitPass;
}

int cmd_rate(const RunConfig& cfg, const Flags& fl, std::ostream& out) {
  const ProcessParams& p = cfg.params;
  const std::string& w = fl.which;
  const bool surface = w == "J" || w == "K" || w == "I";
  const bool marginal = w == "Ja" || w == "Jb" || w == "Ka" || w == "Kb" || w == "Ia" || w == "Ib";
  if (fl.grid) {
    std::ostringstream csv;
    if (surface) {
      if (fl.alpha_range.size() != 2 || fl.beta_range.size() != 2)
        throw ConfigError("alpha-range", "ranges take two values");
      write_grid_csv(csv, surface_grid(p, {fl.alpha_range[0], fl.alpha_range[1]},
                                       {fl.beta_range[0], fl.beta_range[1]}, fl.n_alpha, fl.n_beta));
    } else if (marginal) {
      const Marginal m = parse_marginal(w);
      std::vector<double> r = fl.range;
      if (r.empty()) r = (w.back() == 'a') ? std::vector<double>{0.0, 8.0} : std::vector<double>{-4.0, 2.0};
      if (r.size() != 2) throw ConfigError("range", "--range takes two values");
      csv << (w.back() == 'a' ? "alpha" : "beta") << ',' << w << '\n';
      for (double v : linspace(r[0], r[1], fl.n))
        csv << format_double(v) << ',' << to_string(rate_marginal(p, m, v)) << '\n';
    } else {
      throw ConfigError("which", "--grid is available for J, K, I and the marginal rates");
    }
    emit(cfg, "rate_" + w + ".csv", csv.str(), out);
    return kExitPass;
  }
  ExtReal value;
  if (w == "J") value = rate_J(p, need(fl.alpha, "alpha"), need(fl.beta, "beta"));
  else if (w == "K") value = rate_K(p, need(fl.alpha, "alpha"), need(fl.beta, "beta"));
  else if (w == "I") value = rate_I_mle(p, need(fl.alpha, "alpha"), need(fl.beta, "beta"));
  else if (w == "I_infsup") value = rate_I_infsup(p, need(fl.alpha, "alpha"), need(fl.beta, "beta"));
  else if (marginal)
    value = rate_marginal(p, parse_marginal(w), w.back() == 'a' ? need(fl.alpha, "alpha") : need(fl.beta, "beta"));
  else if (w == "S") value = rate_S(p, need(fl.x, "x"));
  else if (w == "Sigma") value = rate_Sigma(p, need(fl.y, "y"));
  else if (w == "V") value = rate_V(p, need(fl.v, "v"));
  else if (w == "pair") value = rate_pair(p, need(fl.x, "x"), need(fl.y, "y"));
  else if (w == "triplet_x") value = rate_triplet_x(p, need(fl.x, "x"), need(fl.y, "y"), need(fl.z, "z"));
  else if (w == "triplet_L") value = rate_triplet_L(p, need(fl.y, "y"), need(fl.z, "z"), need(fl.t, "t"));
  else throw ConfigError("which", "unknown rate '" + w + "'");
  out << fixed(value.value(), fl.precision) << '\n';
  return kExitPass;
}

int cmd_cgf(const RunConfig& cfg, const Flags& fl, std::ostream& out) {
  const ProcessParams& p = cfg.params;
  const CgfPoint q{fl.lambda, fl.mu, fl.nu, fl.gamma};
  nlohmann::json j{{"mode", fl.mode}, {"params", params_json(p)}};
  if (fl.mode == "limit") {
    j["point"] = {q.lambda, q.mu, q.nu, q.gamma};
    j["value"] = ext_to_json(cgf_limit(p, q));
  } else if (fl.mode == "gradient") {
    j["point"] = {q.lambda, q.mu, q.nu, q.gamma};
    const auto g = cgf_gradient(p, q);
    j["gradient"] = {g[0], g[1], g[2], g[3]};
  } else if (fl.mode == "mc") {
    j["point"] = {q.lambda, q.mu, q.nu, q.gamma};
    const auto mc = cgf_finite_T_mc(p, q, cfg.T, cfg.n_paths, cfg.require_seed(), cfg.steps_per_unit);
    j["T"] = cfg.T;
    j["n_paths"] = cfg.n_paths;
    j["estimate"] = mc.estimate;
    j["stderr"] = mc.std_error;
    j["limit"] = ext_to_json(cgf_limit(p, q));
  } else if (fl.mode == "lambda_star" || fl.mode == "legendre") {
    const double x = need(fl.x, "x"), y = need(fl.y, "y"), z = need(fl.z, "z"), t = need(fl.t, "t");
    if (fl.mode == "lambda_star") {
      j["point"] = {x, y, z, t};
      j["value"] = ext_to_json(lambda_star(p, x, y, z, t));
    } else {
      j["report"] = duality_report(p, x, y, z, t);
    }
  } else {
    throw ConfigError("mode", "unknown cgf mode '" + fl.mode + "'");
  }
  out << j.dump(2) << '\n';
  return kExitPass;
}

int cmd_check(const RunConfig& cfg, const Flags& fl, std::ostream& out) {
  const ProcessParams& p = cfg.params;
  nlohmann::json settings;
  nlohmann::json metrics;
  bool pass = false;
  if (fl.suite == "clt") {
    const std::uint64_t seed = cfg.require_seed();
    const double tol = fl.tolerance.value_or(0.15);
    std::vector<EstimatorKind> kinds;
    for (const auto& e : fl.estimators) kinds.push_back(parse_estimator(e));
    if (kinds.empty()) kinds = {EstimatorKind::mle, EstimatorKind::tilde, EstimatorKind::check};
    const PathBatch batch{p, cfg.steps_per_unit, seed, cfg.n_paths};
    const auto paths = simulate_functionals(batch, {cfg.T}).front();
    settings = {{"T", cfg.T}, {"paths", cfg.n_paths}, {"seed", seed}, {"steps_per_unit", cfg.steps_per_unit},
                {"tolerance", tol}};
    metrics = nlohmann::json::array();
    pass = true;
    for (EstimatorKind k : kinds) {
      const CltReport r = clt_report(p, k, paths, tol);
      metrics.push_back(to_json(r));
      pass = pass && r.pass;
    }
  } else if (fl.suite == "legendre") {
    const CheckResult r = duality_check(p, fl.grid_size, 20, fl.tolerance.value_or(1e-6));
    settings = {{"grid_size", fl.grid_size}};
    metrics = r.metrics;
    pass = r.pass;
  } else if (fl.suite == "infsup") {
    const CheckResult r =
        infsup_check(p, infsup_reference_points(), fl.random_points, cfg.seed.value_or(11), fl.tolerance.value_or(1e-4));
    settings = {{"random_points", fl.random_points}};
    metrics = r.metrics;
    pass = r.pass;
  } else if (fl.suite == "slope") {
    const std::uint64_t seed = cfg.require_seed();
    const double tol = fl.tolerance.value_or(0.3);
    const SlopeReport r = slope_experiment(p, parse_slope_functional(fl.functional), fl.c, fl.T_grid, cfg.n_paths,
                                           seed, tol, cfg.steps_per_unit);
    settings = {{"paths", cfg.n_paths}, {"seed", seed}, {"steps_per_unit", cfg.steps_per_unit}};
    metrics = to_json(r);
    pass = r.pass;
  } else if (fl.suite == "continuity") {
    const CheckResult cont = continuity_check(p);
    const CheckResult contr = contraction_check(p);
    metrics = {{"continuity", cont.metrics}, {"contraction", contr.metrics}};
    settings = nlohmann::json::object();
    pass = cont.pass && contr.pass;
  } else if (fl.suite == "gradient") {
    const CheckResult r = gradient_check(p);
    settings = nlohmann::json::object();
    metrics = r.metrics;
    pass = r.pass;
  } else if (fl.suite == "equivalence") {
    const std::uint64_t seed = cfg.require_seed();
    const auto med = equivalence_medians(p, fl.T_grid, cfg.n_paths, seed, cfg.steps_per_unit);
    settings = {{"T_grid", fl.T_grid}, {"paths", cfg.n_paths}, {"seed", seed}};
    metrics = {{"median_distance", med}};
    pass = true;
    for (std::size_t i = 1; i < med.size(); ++i) pass = pass && med[i] < med[i - 1];
  } else {
    throw ConfigError("suite", "unknown check '" + fl.suite + "'");
  }
  const nlohmann::json report = make_report(fl.suite, p, settings, metrics, pass);
  emit(cfg, "check_" + fl.suite + ".json", report.dump(2) + "\n", out);
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_figures(const RunConfig& cfg, const Flags& fl, std::ostream& out) {
  const ProcessParams& p = cfg.params;
  if (fl.fig == 1 || fl.fig == 2) {
    std::ostringstream csv;
    write_grid_csv(csv, surface_grid(p, {3.0, 5.0}, {-4.0, -0.5}, fl.n_alpha, fl.n_beta));
    emit(cfg, fl.fig == 1 ? "fig1_J.csv" : "fig2_K.csv", csv.str(), out);
  } else if (fl.fig == 3) {
    std::ostringstream ca;
    std::ostringstream cb;
    write_profile_csv(ca, true, profile_curves(p, true, linspace(0.0, 8.0, 161)));
    write_profile_csv(cb, false, profile_curves(p, false, linspace(-4.0, 2.0, 121)));
    emit(cfg, "fig3_alpha.csv", ca.str(), out);
    if (cfg.out.empty()) out << '\n';
    emit(cfg, "fig3_beta.csv", cb.str(), out);
  } else {
    throw ConfigError("fig", "--fig must be 1, 2 or 3");
  }
  return kExitPass;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, const std::string& key = "") {
  nlohmann::json j{{"error", kind}, {"message", message}};
  if (!key.empty()) j["key"] = key;
  err << j.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Large deviations of drift estimators for the CIR process", "cir_ldp"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags fl;
  ConfigOverrides& o = fl.overrides;
  app.add_option("--config", fl.config, "Flat JSON config file");
  app.add_option("--a", o.a, "Dimension parameter a (> 2)");
  app.add_option("--b", o.b, "Drift parameter b (< 0)");
  app.add_option("--x0", o.x0, "Initial state (default 1)");
  app.add_option("--T", o.T, "Horizon");
  app.add_option("--steps-per-unit", o.steps_per_unit, "Grid steps per unit time (default 200)");
  app.add_option("--paths", o.n_paths, "Number of simulated paths");
  app.add_option("--seed", o.seed, "Master seed (64-bit unsigned)");
  app.add_option("--out", o.out, "Output directory (default: stdout)");
  app.add_option("--precision", fl.precision, "Digits after the decimal point for scalar output");

  auto* sim = app.add_subcommand("simulate", "Write trajectory CSVs");
  auto* est = app.add_subcommand("estimate", "Write the estimates CSV");
  est->add_option("--estimator", fl.estimators, "mle, tilde, check or combined (repeatable)");

  auto* rate = app.add_subcommand("rate", "Evaluate a rate function at a point or on a grid");
  rate->add_option("--which", fl.which,
                   "J K I I_infsup Ja Jb Ka Kb Ia Ib S Sigma V pair triplet_x triplet_L")
      ->required();
  rate->add_option("--alpha", fl.alpha);
  rate->add_option("--beta", fl.beta);
  rate->add_option("--x", fl.x);
  rate->add_option("--y", fl.y);
  rate->add_option("--z", fl.z);
  rate->add_option("--t", fl.t);
  rate->add_option("--v", fl.v);
  rate->add_flag("--grid", fl.grid, "Evaluate on a grid and write CSV");
  rate->add_option("--alpha-range", fl.alpha_range)->expected(2);
  rate->add_option("--beta-range", fl.beta_range)->expected(2);
  rate->add_option("--range", fl.range, "Range of a marginal grid")->expected(2);
  rate->add_option("--n-alpha", fl.n_alpha);
  rate->add_option("--n-beta", fl.n_beta);
  rate->add_option("--n", fl.n, "Points of a marginal grid");

  auto* cgf = app.add_subcommand("cgf", "Limiting CGF, its gradient, Monte Carlo estimate or Legendre transform");
  cgf->add_option("--mode", fl.mode, "limit, gradient, mc, lambda_star or legendre");
  cgf->add_option("--lambda", fl.lambda);
  cgf->add_option("--mu", fl.mu);
  cgf->add_option("--nu", fl.nu);
  cgf->add_option("--gamma", fl.gamma);
  cgf->add_option("--x", fl.x);
  cgf->add_option("--y", fl.y);
  cgf->add_option("--z", fl.z);
  cgf->add_option("--t", fl.t);

  auto* check = app.add_subcommand("check", "Run a validation suite and write a JSON report");
  check->add_option("suite", fl.suite, "clt, legendre, infsup, slope, continuity, gradient or equivalence")
      ->required();
  check->add_option("--estimator", fl.estimators);
  check->add_option("--tolerance", fl.tolerance);
  check->add_option("--functional", fl.functional, "S, Sigma or V");
  check->add_option("--c", fl.c, "Threshold");
  check->add_option("--T-grid", fl.T_grid);
  check->add_option("--grid-size", fl.grid_size, "Points per axis of the quadruplet duality grid");
  check->add_option("--random", fl.random_points, "Random points for the inf-sup bound");

  auto* fig = app.add_subcommand("figures", "Emit rate grids for the three figures");
  fig->add_option("--fig", fl.fig, "1, 2 or 3")->required();
  fig->add_option("--n-alpha", fl.n_alpha);
  fig->add_option("--n-beta", fl.n_beta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kExitPass;
    }
    report_error(err, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    const RunConfig cfg =
        parse_config(fl.config ? std::optional<std::filesystem::path>(*fl.config) : std::nullopt, o);
    if (sim->parsed()) return cmd_simulate(cfg, out);
    if (est->parsed()) return cmd_estimate(cfg, fl, out);
    if (rate->parsed()) return cmd_rate(cfg, fl, out);
    if (cgf->parsed()) return cmd_cgf(cfg, fl, out);
    if (check->parsed()) return cmd_check(cfg, fl, out);
    if (fig->parsed()) return cmd_figures(cfg, fl, out);
  } catch (const ConfigError& e) {
    report_error(err, e.kind(), e.what(), e.key());
    return kExitUsage;
  } catch (const RegimeError& e) {
    report_error(err, e.kind(), e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    report_error(err, "Error", e.what());
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace cirldp
