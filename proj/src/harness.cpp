#include "cirldp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cirldp/errors.hpp"
#include "cirldp/io.hpp"

namespace cirldp {

CltCovariance clt_covariance(const ProcessParams& p) {
  CltCovariance out{};
  out.C = {{{-p.b / (p.a - 2.0), 1.0}, {1.0, -p.a / p.b}}};
  const double det = out.C[0][0] * out.C[1][1] - out.C[0][1] * out.C[1][0];
  out.target = {{{4.0 * out.C[1][1] / det, -4.0 * out.C[0][1] / det},
                 {-4.0 * out.C[1][0] / det, 4.0 * out.C[0][0] / det}}};
  return out;
}

CltReport clt_report(const ProcessParams& p, EstimatorKind kind, const std::vector<PathFunctionals>& paths,
                     double tolerance) {
  if (paths.size() < 2) throw DomainError("clt_report: need at least two paths");
  CltReport r{};
  r.kind = kind;
  r.T = paths.front().T;
  r.n_paths = paths.size();
  r.tolerance = tolerance;
  r.target = clt_covariance(p).target;
  const double root = std::sqrt(r.T);
  std::vector<std::array<double, 2>> z(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const EstimatePair e = estimate(kind, paths[i]);
    z[i] = {root * (e.alpha - p.a), root * (e.beta - p.b)};
  }
  const double n = static_cast<double>(z.size());
  r.mean = {0.0, 0.0};
  for (const auto& v : z) {
    r.mean[0] += v[0] / n;
    r.mean[1] += v[1] / n;
  }
  r.covariance = {};
  for (const auto& v : z) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.covariance[i][j] += (v[i] - r.mean[i]) * (v[j] - r.mean[j]) / (n - 1.0);
  }
  const std::array<std::array<int, 2>, 3> entries{{{0, 0}, {0, 1}, {1, 1}}};
  r.pass = true;
  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = entries[k];
    r.relative_deviation[k] = std::abs(r.covariance[i][j] - r.target[i][j]) / std::abs(r.target[i][j]);
    if (!(r.relative_deviation[k] <= tolerance)) r.pass = false;
  }
  return r;
}

CltReport clt_experiment(const ProcessParams& p, EstimatorKind kind, double T, std::size_t n_paths,
                         std::uint64_t seed, double tolerance, double steps_per_unit) {
  const PathBatch batch{p, steps_per_unit, seed, n_paths};
  return clt_report(p, kind, simulate_functionals(batch, {T}).front(), tolerance);
}

SlopeFunctional parse_slope_functional(const std::string& name) {
  if (name == "S") return SlopeFunctional::S;
  if (name == "Sigma") return SlopeFunctional::Sigma;
  if (name == "V") return SlopeFunctional::V;
  throw ConfigError("functional", "unknown functional '" + name + "'");
}

std::string to_string(SlopeFunctional f) {
  switch (f) {
    case SlopeFunctional::S: return "S";
    case SlopeFunctional::Sigma: return "Sigma";
    case SlopeFunctional::V: return "V";
  }
  return "S";
}

namespace {

double observe(SlopeFunctional f, const PathFunctionals& pf) {
  switch (f) {
    case SlopeFunctional::S: return pf.S;
    case SlopeFunctional::Sigma: return pf.Sigma;
    case SlopeFunctional::V: return pf.V;
  }
  return pf.S;
}

double ergodic_value(const ProcessParams& p, SlopeFunctional f) {
  switch (f) {
    case SlopeFunctional::S: return -p.a / p.b;
    case SlopeFunctional::Sigma: return -p.b / (p.a - 2.0);
    case SlopeFunctional::V: return 2.0 / (p.a - 2.0);
  }
  return 0.0;
}

ExtReal functional_rate(const ProcessParams& p, SlopeFunctional f, double c) {
  switch (f) {
    case SlopeFunctional::S: return rate_S(p, c);
    case SlopeFunctional::Sigma: return rate_Sigma(p, c);
    case SlopeFunctional::V: return rate_V(p, c);
  }
  return ExtReal::infinity();
}

}  // namespace

SlopeReport slope_report(const ProcessParams& p, SlopeFunctional functional, double c,
                         const std::vector<double>& T_grid,
                         const std::vector<std::vector<PathFunctionals>>& paths, double tolerance,
                         std::size_t n_min) {
  if (T_grid.empty() || paths.size() != T_grid.size()) throw DomainError("slope_report: grid mismatch");
  SlopeReport r{};
  r.functional = functional;
  r.c = c;
  r.upper_tail = c >= ergodic_value(p, functional);
  r.T_grid = T_grid;
  r.target = functional_rate(p, functional, c).value();
  r.tolerance = tolerance;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < T_grid.size(); ++k) {
    std::size_t hits = 0;
    for (const PathFunctionals& pf : paths[k]) {
      const double v = observe(functional, pf);
      if (r.upper_tail ? v >= c : v <= c) ++hits;
    }
    const double prob = static_cast<double>(hits) / static_cast<double>(paths[k].size());
    r.hits.push_back(hits);
    r.probability.push_back(prob);
    r.slope.push_back(hits > 0 ? -std::log(prob) / T_grid[k] : nan);
    if (k == 0 || hits == 0 || r.hits[k - 1] == 0)
      r.incremental_slope.push_back(nan);
    else
      r.incremental_slope.push_back(-(std::log(prob) - std::log(r.probability[k - 1])) /
                                    (T_grid[k] - T_grid[k - 1]));
  }
  if (r.hits.back() < n_min)
    throw InconclusiveError("slope_experiment: only " + std::to_string(r.hits.back()) +
                            " tail hits at the largest horizon");
  const double last = r.slope.back();
  if (r.target == 0.0)
    r.pass = std::abs(last) <= tolerance;
  else
    r.pass = std::abs(last - r.target) <= tolerance * r.target;
  return r;
}

SlopeReport slope_experiment(const ProcessParams& p, SlopeFunctional functional, double c,
                             const std::vector<double>& T_grid, std::size_t n_paths, std::uint64_t seed,
                             double tolerance, double steps_per_unit) {
  const PathBatch batch{p, steps_per_unit, seed, n_paths};
  return slope_report(p, functional, c, T_grid, simulate_functionals(batch, T_grid), tolerance);
}

std::vector<double> equivalence_medians(const ProcessParams& p, const std::vector<double>& T_grid,
                                        std::size_t n_paths, std::uint64_t seed, double steps_per_unit) {
  const PathBatch batch{p, steps_per_unit, seed, n_paths};
  const auto paths = simulate_functionals(batch, T_grid);
  std::vector<double> medians;
  for (const auto& at_T : paths) {
    std::vector<double> dist;
    for (const PathFunctionals& pf : at_T) {
      const EstimatePair m = estimate_mle(pf);
      const EstimatePair c = estimate_combined(pf);
      dist.push_back(std::hypot(m.alpha - c.alpha, m.beta - c.beta));
    }
    auto mid = dist.begin() + static_cast<std::ptrdiff_t>(dist.size() / 2);
    std::nth_element(dist.begin(), mid, dist.end());
    double med = *mid;
    if (dist.size() % 2 == 0) med = 0.5 * (med + *std::max_element(dist.begin(), mid));
    medians.push_back(med);
  }
  return medians;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("linspace: need at least two points");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

std::vector<GridRow> surface_grid(const ProcessParams& p, std::array<double, 2> alpha_range,
                                  std::array<double, 2> beta_range, std::size_t n_alpha, std::size_t n_beta) {
  const auto alphas = linspace(alpha_range[0], alpha_range[1], n_alpha);
  const auto betas = linspace(beta_range[0], beta_range[1], n_beta);
  std::vector<GridRow> rows;
  rows.reserve(n_alpha * n_beta);
  for (double al : alphas) {
    for (double be : betas) {
      const ExtReal J = rate_J(p, al, be);
      const ExtReal K = rate_K(p, al, be);
      rows.push_back({al, be, J, K, min(J, K)});
    }
  }
  return rows;
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << "alpha,beta,J,K,I\n";
  for (const GridRow& r : rows) {
    out << format_double(r.alpha) << ',' << format_double(r.beta) << ',' << to_string(r.J) << ','
        << to_string(r.K) << ',' << to_string(r.I) << '\n';
  }
}

std::vector<ProfileRow> profile_curves(const ProcessParams& p, bool dimensional, const std::vector<double>& grid) {
  std::vector<ProfileRow> rows;
  for (double v : grid) {
    const ExtReal J = rate_marginal(p, dimensional ? Marginal::Ja : Marginal::Jb, v);
    const ExtReal K = rate_marginal(p, dimensional ? Marginal::Ka : Marginal::Kb, v);
    rows.push_back({v, J, K, min(J, K)});
  }
  return rows;
}

void write_profile_csv(std::ostream& out, bool dimensional, const std::vector<ProfileRow>& rows) {
  out << (dimensional ? "alpha,Ja,Ka,Ia\n" : "beta,Jb,Kb,Ib\n");
  for (const ProfileRow& r : rows) {
    out << format_double(r.v) << ',' << to_string(r.J) << ',' << to_string(r.K) << ',' << to_string(r.I) << '\n';
  }
}

nlohmann::json params_json(const ProcessParams& p) { return {{"a", p.a}, {"b", p.b}, {"x0", p.x0}}; }

namespace {

nlohmann::json mat_json(const Mat2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace

nlohmann::json to_json(const CltReport& r) {
  return {{"estimator", std::string(to_string(r.kind))},
          {"T", r.T},
          {"n_paths", r.n_paths},
          {"mean", {r.mean[0], r.mean[1]}},
          {"covariance", mat_json(r.covariance)},
          {"target", mat_json(r.target)},
          {"relative_deviation", {r.relative_deviation[0], r.relative_deviation[1], r.relative_deviation[2]}},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

nlohmann::json to_json(const SlopeReport& r) {
  nlohmann::json slopes = nlohmann::json::array();
  nlohmann::json inc = nlohmann::json::array();
  for (double s : r.slope) slopes.push_back(number_or_null(s));
  for (double s : r.incremental_slope) inc.push_back(number_or_null(s));
  return {{"functional", to_string(r.functional)},
          {"c", r.c},
          {"tail", r.upper_tail ? "upper" : "lower"},
          {"T_grid", r.T_grid},
          {"hits", r.hits},
          {"probability", r.probability},
          {"slope", slopes},
          {"incremental_slope", inc},
          {"target", r.target},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

nlohmann::json make_report(const std::string& experiment, const ProcessParams& p, nlohmann::json settings,
                           nlohmann::json metrics, bool pass) {
  return {{"experiment", experiment},
          {"params", params_json(p)},
          {"settings", std::move(settings)},
          {"metrics", std::move(metrics)},
          {"pass", pass}};
}

}  // namespace cirldp
