#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cirldp/cir_model.hpp"

namespace cirldp {

/// Observables of one path over [0, T]. Time integrals use the trapezoid rule.
struct PathFunctionals {
  double T = 0.0;
  double x0 = 1.0;
  double xT = 0.0;
  double xT_over_T = 0.0;
  double sqrt_xT_over_T = 0.0;
  double S = 0.0;       // (1/T) int X dt
  double Sigma = 0.0;   // (1/T) int dt / X
  double L = 0.0;       // (log X_T - log x0) / T
  double curlyL = 0.0;  // -sqrt(-log X_T / T) if X_T < 1, else log X_T / T
  double V = 0.0;       // S * Sigma - 1
};

/// Builds functionals from the endpoint and the two time integrals.
PathFunctionals make_functionals(double T, double x0, double xT, double int_x, double int_inv_x);

/// Streaming trapezoid accumulation on a uniform grid, so long paths never
/// need to be stored.
class FunctionalAccumulator {
 public:
  FunctionalAccumulator(double x0, double dt);

  void push(double x);
  double time() const { return static_cast<double>(n_) * dt_; }
  double last() const { return last_; }
  double integral_x() const { return int_x_; }
  double integral_inv_x() const { return int_inv_; }
  PathFunctionals snapshot() const;

 private:
  double x0_;
  double dt_;
  double last_;
  std::size_t n_ = 0;
  double int_x_ = 0.0;
  double int_inv_ = 0.0;
};

/// Throws GridError unless the grid starts at 0, is strictly increasing and
/// uniform to relative tolerance 1e-9, and has at least two points.
PathFunctionals compute_functionals(const Trajectory& traj);

/// int_0^T dX / X through the Ito identity: T L + 2 T Sigma.
double ito_log_integral(const PathFunctionals& pf);

struct EstimatePair {
  double alpha;
  double beta;
};

inline constexpr double kDegeneracyThreshold = 1e-12;

EstimatePair estimate_mle(const PathFunctionals& pf);
EstimatePair estimate_tilde(const PathFunctionals& pf);
EstimatePair estimate_check(const PathFunctionals& pf);
/// Tilde pair when X_T >= 1, check pair otherwise.
EstimatePair estimate_combined(const PathFunctionals& pf);

enum class EstimatorKind { mle, tilde, check, combined };

std::string_view to_string(EstimatorKind kind);
EstimatorKind parse_estimator(std::string_view name);
EstimatePair estimate(EstimatorKind kind, const PathFunctionals& pf);

struct EstimateRow {
  std::size_t path_id;
  EstimatorKind kind;
  EstimatePair value;
};

/// Header `path_id,estimator,alpha,beta`.
void write_estimates_csv(std::ostream& out, const std::vector<EstimateRow>& rows);

/// Header `t,x`.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace cirldp
