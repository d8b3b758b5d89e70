#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cirldp/rng.hpp"

namespace cirldp {

/// Model parameters of dX = (a + bX) dt + 2 sqrt(X) dB, X_0 = x0.
/// Only the ergodic, zero-avoiding regime a > 2, b < 0 is supported.
struct ProcessParams {
  double a = 4.0;
  double b = -1.0;
  double x0 = 1.0;
};

/// Checks a > 2, b < 0, x0 > 0; throws RegimeError otherwise.
ProcessParams validate_params(double a, double b, double x0 = 1.0);

/// Gamma(a/2, -2/b), the invariant law of the process.
struct StationaryLaw {
  double shape;
  double scale;
  double mean;          // -a/b
  double mean_inverse;  // E[1/X] = -b/(a-2)
  double variance;      // 2a/b^2
};

StationaryLaw stationary_law(const ProcessParams& params);

struct Moments {
  double mean;
  double variance;
};

/// Mean and variance of X_t given X_0 = x. Throws DomainError if t <= 0 or x <= 0.
Moments conditional_moments(const ProcessParams& params, double t, double x);

/// Exact transition law over a step t: X_t = scale * W with W noncentral
/// chi-squared, `dof` degrees of freedom and noncentrality `noncentrality_per_x * x`.
/// `d0` and `f0` are the Bessel-kernel constants -b and (a-2)/2.
struct TransitionKernel {
  double t;
  double d0;
  double f0;
  double scale;
  double dof;
  double noncentrality_per_x;
};

TransitionKernel transition_kernel(const ProcessParams& params, double t);

/// log p(t, x, y) of the transition density.
double log_transition_density(const ProcessParams& params, double t, double x, double y);

/// p(t, x, y). Throws DomainError for nonpositive t, x, y.
double transition_density(const ProcessParams& params, double t, double x, double y);

/// One exact draw of X_t given X_0 = x: Gamma(dof/2 + J, 2) scaled, J ~ Poisson(nc/2).
double sample_transition(const TransitionKernel& kernel, double x, Philox4x32& rng);

double sample_transition(const ProcessParams& params, double t, double x, Philox4x32& rng);

/// Skeleton of one path on the uniform grid t_i = i T / n_steps.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  ProcessParams params;

  double horizon() const { return times.back(); }
  std::size_t n_steps() const { return times.size() - 1; }
};

/// Chains exact transitions. Throws DomainError if T <= 0 or n_steps == 0.
Trajectory simulate_path(const ProcessParams& params, double T, std::size_t n_steps,
                         Philox4x32& rng);

/// Default time resolution for paths feeding time integrals.
inline constexpr double kDefaultStepsPerUnitTime = 200.0;

/// Number of grid steps for horizon T at the given resolution (at least 1).
std::size_t steps_for_horizon(double T, double steps_per_unit = kDefaultStepsPerUnitTime);

}  // namespace cirldp
