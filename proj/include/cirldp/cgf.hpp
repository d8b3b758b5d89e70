#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include <json.hpp>

#include "cirldp/cir_model.hpp"
#include "cirldp/ext_real.hpp"

namespace cirldp {

/// Argument of the limiting CGF of (sqrt(X_T/T), S_T, Sigma_T, curlyL_T):
/// coefficients of sqrt(T X_T), int X dt, int dt/X and T curlyL_T.
struct CgfPoint {
  double lambda = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double gamma = 0.0;
};

/// d = sqrt(b^2 - 8 mu), f = sqrt((a-2)^2 - 8 nu) / 2, phi = 2f + a + 2.
struct DualVars {
  double d;
  double f;
  double phi() const { return 2.0 * f + a_plus_2; }
  double g() const { return phi() / 4.0; }
  double a_plus_2;
};

/// Dual variables at (mu, nu). Throws DomainError outside mu < b^2/8, nu < (a-2)^2/8.
DualVars dual_vars(const ProcessParams& params, double mu, double nu);

/// True when mu < b^2/8 and nu < (a-2)^2/8.
bool in_cgf_domain(const ProcessParams& params, const CgfPoint& p);

/// Limiting normalized CGF. Equals
///   -(d/2)(1+f) - ab/4 + max(lambda_+^2/(d-b), gamma_-^2/phi)
/// inside the domain and +inf elsewhere (the boundary included).
ExtReal cgf_limit(const ProcessParams& params, const CgfPoint& p);

inline constexpr double kBoundaryTolerance = 1e-9;

/// Partial derivatives of cgf_limit in (lambda, mu, nu, gamma). Throws
/// BoundaryError within kBoundaryTolerance of the domain boundary or of the
/// surface where the two quadratic terms switch.
std::array<double, 4> cgf_gradient(const ProcessParams& params, const CgfPoint& p);

struct MonteCarloEstimate {
  double estimate;
  double std_error;
};

/// (1/T) log of the sample mean of exp(T <p, quadruplet>) over n_paths
/// simulated paths, with a delta-method standard error. Paths use
/// steps_per_unit grid steps per unit time.
MonteCarloEstimate cgf_finite_T_mc(const ProcessParams& params, const CgfPoint& p, double T,
                                   std::size_t n_paths, std::uint64_t seed,
                                   double steps_per_unit = kDefaultStepsPerUnitTime);

/// The concave objective whose supremum over d, f > 0 is lambda_star.
double lambda_star_objective(const ProcessParams& params, double x, double y, double z, double t,
                             double d, double f);

struct LambdaStarResult {
  ExtReal value;
  double d = 0.0;
  double f = 0.0;
  int iterations = 0;
};

/// Legendre transform of the limiting CGF at (x, y, z, t) by Newton ascent
/// on the dual variables (d, f).
LambdaStarResult lambda_star_solve(const ProcessParams& params, double x, double y, double z, double t);

ExtReal lambda_star(const ProcessParams& params, double x, double y, double z, double t);

/// sup over the CGF domain of <(x,y,z,t), p> - cgf_limit(p), treating
/// cgf_limit as a black box: nested 1-D maximization over (gamma, lambda)
/// inside a damped Newton ascent over (mu, nu).
ExtReal legendre_transform_numeric(const ProcessParams& params, double x, double y, double z, double t);

/// sup over (mu, nu) of x mu + y nu - cgf_limit(0, mu, nu, 0): the rate of
/// the couple (S_T, Sigma_T) computed numerically.
ExtReal legendre_transform_pair_numeric(const ProcessParams& params, double x, double y);

/// {point, closed_form, numeric, abs_diff}
nlohmann::json duality_report(const ProcessParams& params, double x, double y, double z, double t);

}  // namespace cirldp
