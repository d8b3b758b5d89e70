#include "cirldp/functionals.hpp"

#include <cmath>

#include "cirldp/errors.hpp"
#include "cirldp/io.hpp"

namespace cirldp {

PathFunctionals make_functionals(double T, double x0, double xT, double int_x, double int_inv_x) {
  PathFunctionals pf;
  pf.T = T;
  pf.x0 = x0;
  pf.xT = xT;
  pf.xT_over_T = xT / T;
  pf.sqrt_xT_over_T = std::sqrt(pf.xT_over_T);
  pf.S = int_x / T;
  pf.Sigma = int_inv_x / T;
  const double log_xT = std::log(xT);
  pf.L = (log_xT - std::log(x0)) / T;
  pf.curlyL = xT < 1.0 ? -std::sqrt(-log_xT / T) : log_xT / T;
  pf.V = pf.S * pf.Sigma - 1.0;
  return pf;
}

FunctionalAccumulator::FunctionalAccumulator(double x0, double dt) : x0_(x0), dt_(dt), last_(x0) {}

void FunctionalAccumulator::push(double x) {
  int_x_ += 0.5 * dt_ * (last_ + x);
  int_inv_ += 0.5 * dt_ * (1.0 / last_ + 1.0 / x);
  last_ = x;
  ++n_;
}

PathFunctionals FunctionalAccumulator::snapshot() const {
  return make_functionals(time(), x0_, last_, int_x_, int_inv_);
}

PathFunctionals compute_functionals(const Trajectory& traj) {
  const auto& t = traj.times;
  const auto& x = traj.values;
  if (t.size() < 2 || x.size() != t.size()) throw GridError("trajectory needs at least two points");
  if (t[0] != 0.0) throw GridError("grid must start at 0");
  const double T = t.back();
  const double dt = T / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) throw GridError("grid must be increasing");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (std::abs((t[i] - t[i - 1]) - dt) > 1e-9 * dt) throw GridError("grid is not uniform");
  }
  double int_x = 0.0;
  double int_inv = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    int_x += 0.5 * dt * (x[i - 1] + x[i]);
    int_inv += 0.5 * dt * (1.0 / x[i - 1] + 1.0 / x[i]);
  }
  return make_functionals(T, x[0], x.back(), int_x, int_inv);
}

double ito_log_integral(const PathFunctionals& pf) { return pf.T * pf.L + 2.0 * pf.T * pf.Sigma; }

namespace {

void require_nondegenerate(const PathFunctionals& pf) {
  if (!(pf.V > kDegeneracyThreshold)) throw DegenerateError("V_T is not positive; estimator undefined");
}

}  // namespace

EstimatePair estimate_mle(const PathFunctionals& pf) {
  require_nondegenerate(pf);
  return {(pf.S * (2.0 * pf.Sigma + pf.L) - pf.xT_over_T) / pf.V,
          ((pf.xT_over_T - 2.0) * pf.Sigma - pf.L) / pf.V};
}

EstimatePair estimate_tilde(const PathFunctionals& pf) {
  require_nondegenerate(pf);
  return {(2.0 * pf.S * pf.Sigma - pf.xT_over_T) / pf.V, (pf.xT_over_T - 2.0) * pf.Sigma / pf.V};
}

EstimatePair estimate_check(const PathFunctionals& pf) {
  require_nondegenerate(pf);
  return {pf.S * (2.0 * pf.Sigma + pf.L) / pf.V, (-2.0 * pf.Sigma - pf.L) / pf.V};
}

EstimatePair estimate_combined(const PathFunctionals& pf) {
  return pf.xT >= 1.0 ? estimate_tilde(pf) : estimate_check(pf);
}

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::mle: return "mle";
    case EstimatorKind::tilde: return "tilde";
    case EstimatorKind::check: return "check";
    case EstimatorKind::combined: return "combined";
  }
  return "mle";
}

EstimatorKind parse_estimator(std::string_view name) {
  if (name == "mle") return EstimatorKind::mle;
  if (name == "tilde") return EstimatorKind::tilde;
  if (name == "check") return EstimatorKind::check;
  if (name == "combined") return EstimatorKind::combined;
  throw ConfigError("estimator", "unknown estimator '" + std::string(name) + "'");
}

EstimatePair estimate(EstimatorKind kind, const PathFunctionals& pf) {
  switch (kind) {
    case EstimatorKind::mle: return estimate_mle(pf);
    case EstimatorKind::tilde: return estimate_tilde(pf);
    case EstimatorKind::check: return estimate_check(pf);
    case EstimatorKind::combined: return estimate_combined(pf);
  }
  return estimate_mle(pf);
}

void write_estimates_csv(std::ostream& out, const std::vector<EstimateRow>& rows) {
  out << "path_id,estimator,alpha,beta\n";
  for (const auto& r : rows) {
    out << r.path_id << ',' << to_string(r.kind) << ',' << format_double(r.value.alpha) << ','
        << format_double(r.value.beta) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,x\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out << format_double(traj.times[i]) << ',' << format_double(traj.values[i]) << '\n';
  }
}

}  // namespace cirldp
