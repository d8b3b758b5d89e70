#include "cirldp/bessel.hpp"

#include <cmath>
#include <numbers>

#include "cirldp/errors.hpp"

namespace cirldp {
namespace {

// log of sum_k (z^2/4)^k / (k! (nu+1)_k), the series with the leading
// (z/2)^nu / Gamma(nu+1) factored out. Terms are positive; rescale when
// they grow large so z up to ~1000 stays finite.
double log_scaled_series(double nu, double z) {
  const double q = 0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  double log_scale = 0.0;
  for (int k = 0; k < 100000; ++k) {
    term *= q / ((k + 1.0) * (nu + k + 1.0));
    sum += term;
    if (term < sum * 1e-17 && k + 1.0 > 0.5 * z) break;
    if (sum > 1e250) {
      sum *= 1e-250;
      term *= 1e-250;
      log_scale += 250.0 * std::numbers::ln10;
    }
  }
  return std::log(sum) + log_scale;
}

// Hankel expansion; valid when z >> nu^2 / z, which the caller guarantees.
double log_hankel(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (k * 8.0 * z);
    if (std::abs(next) > std::abs(term)) break;  // asymptotic series turned
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return z - 0.5 * std::log(2.0 * std::numbers::pi * z) + std::log(sum);
}

}  // namespace

double log_bessel_i(double nu, double z) {
  if (!(z > 0.0)) throw DomainError("log_bessel_i: argument must be positive");
  if (!(nu >= 0.0)) throw DomainError("log_bessel_i: order must be nonnegative");
  if (z >= 20.0 * (1.0 + nu)) return log_hankel(nu, z);
  return nu * std::log(0.5 * z) - std::lgamma(nu + 1.0) + log_scaled_series(nu, z);
}

}  // namespace cirldp
