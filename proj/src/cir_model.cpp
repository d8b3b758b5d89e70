#include "cirldp/cir_model.hpp"

#include <cmath>
#include <random>
#include <string>

#include "cirldp/bessel.hpp"
#include "cirldp/errors.hpp"

namespace cirldp {

ProcessParams validate_params(double a, double b, double x0) {
  if (!(a > 2.0)) throw RegimeError("dimension a must exceed 2 (got " + std::to_string(a) + ")");
  if (!(b < 0.0)) throw RegimeError("drift b must be negative (got " + std::to_string(b) + ")");
  if (!(x0 > 0.0)) throw RegimeError("initial state x0 must be positive");
  return ProcessParams{a, b, x0};
}

StationaryLaw stationary_law(const ProcessParams& p) {
  StationaryLaw law{};
  law.shape = 0.5 * p.a;
  law.scale = -2.0 / p.b;
  law.mean = -p.a / p.b;
  law.mean_inverse = -p.b / (p.a - 2.0);
  law.variance = 2.0 * p.a / (p.b * p.b);
  return law;
}

Moments conditional_moments(const ProcessParams& p, double t, double x) {
  if (!(t > 0.0)) throw DomainError("conditional_moments: t must be positive");
  if (!(x > 0.0)) throw DomainError("conditional_moments: x must be positive");
  const double decay = std::exp(p.b * t);
  const double one_minus = -std::expm1(p.b * t);
  const double mean = x * decay - (p.a / p.b) * one_minus;
  const double variance = 4.0 * x * decay * one_minus / (-p.b) +
                          2.0 * p.a * one_minus * one_minus / (p.b * p.b);
  return {mean, variance};
}

TransitionKernel transition_kernel(const ProcessParams& p, double t) {
  if (!(t > 0.0)) throw DomainError("transition: t must be positive");
  const double one_minus = -std::expm1(p.b * t);
  TransitionKernel k{};
  k.t = t;
  k.d0 = -p.b;
  k.f0 = 0.5 * (p.a - 2.0);
  k.scale = one_minus / (-p.b);
  k.dof = p.a;
  k.noncentrality_per_x = -p.b * std::exp(p.b * t) / one_minus;
  return k;
}

double log_transition_density(const ProcessParams& p, double t, double x, double y) {
  if (!(t > 0.0) || !(x > 0.0) || !(y > 0.0))
    throw DomainError("transition_density: t, x, y must be positive");
  const double d = -p.b;
  const double f = 0.5 * (p.a - 2.0);
  const double half = 0.5 * d * t;
  // log sinh(h) = h + log((1 - e^{-2h}) / 2), stable for large h
  const double log_sinh = half + std::log(-0.5 * std::expm1(-2.0 * half));
  const double coth = 1.0 / std::tanh(half);
  const double log_arg = std::log(d) + 0.5 * (std::log(x) + std::log(y)) - std::log(2.0) - log_sinh;
  // Leading series term once the argument would underflow; relative error below z^2.
  const double log_i = log_arg < -200.0 ? f * (log_arg - std::log(2.0)) - std::lgamma(f + 1.0)
                                        : log_bessel_i(f, std::exp(log_arg));
  return std::log(d) - 0.25 * (p.a - 2.0) * (std::log(x) - std::log(y)) - std::log(4.0) - log_sinh + log_i -
         0.25 * (p.a * p.b * t + d * (x + y) * coth + p.b * (x - y));
}

double transition_density(const ProcessParams& p, double t, double x, double y) {
  return std::exp(log_transition_density(p, t, x, y));
}

double sample_transition(const TransitionKernel& k, double x, Philox4x32& rng) {
  if (!(x > 0.0)) throw DomainError("sample_transition: x must be positive");
  const double half_nc = 0.5 * k.noncentrality_per_x * x;
  long long j = 0;
  if (half_nc > 0.0) {
    std::poisson_distribution<long long> poisson(half_nc);
    j = poisson(rng);
  }
  std::gamma_distribution<double> gamma(0.5 * k.dof + static_cast<double>(j), 2.0);
  double w = gamma(rng);
  while (!(w > 0.0)) w = gamma(rng);
  return k.scale * w;
}

double sample_transition(const ProcessParams& p, double t, double x, Philox4x32& rng) {
  return sample_transition(transition_kernel(p, t), x, rng);
}

Trajectory simulate_path(const ProcessParams& p, double T, std::size_t n_steps, Philox4x32& rng) {
  if (!(T > 0.0)) throw DomainError("simulate_path: horizon must be positive");
  if (n_steps == 0) throw DomainError("simulate_path: need at least one step");
  const double dt = T / static_cast<double>(n_steps);
  const TransitionKernel kernel = transition_kernel(p, dt);
  Trajectory traj;
  traj.params = p;
  traj.times.resize(n_steps + 1);
  traj.values.resize(n_steps + 1);
  traj.times[0] = 0.0;
  traj.values[0] = p.x0;
  for (std::size_t i = 1; i <= n_steps; ++i) {
    traj.times[i] = static_cast<double>(i) * dt;
    traj.values[i] = sample_transition(kernel, traj.values[i - 1], rng);
  }
  traj.times[n_steps] = T;
  return traj;
}

std::size_t steps_for_horizon(double T, double steps_per_unit) {
  const double n = std::round(T * steps_per_unit);
  return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

}  // namespace cirldp
