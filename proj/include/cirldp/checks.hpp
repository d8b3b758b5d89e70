#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cirldp/cir_model.hpp"

namespace cirldp {

/// Outcome of a deterministic numerical cross-check.
struct CheckResult {
  bool pass = false;
  nlohmann::json metrics;
};

/// lambda_star against the numeric Legendre transform on an n^4 grid of
/// admissible quadruplets, and the couple rate against the numeric
/// transform of the CGF restricted to (mu, nu) on an n_pair^2 grid.
CheckResult duality_check(const ProcessParams& params, int n_quad = 5, int n_pair = 20, double tol = 1e-6);

/// 30 points spread over the admissible region of the inf-sup (beta != 0).
std::vector<std::array<double, 2>> infsup_reference_points();

/// rate_I_infsup = min(J, K) within tol at `points`, and never above
/// min(J, K) + tol at n_random further admissible points.
CheckResult infsup_check(const ProcessParams& params, const std::vector<std::array<double, 2>>& points,
                         int n_random = 200, std::uint64_t seed = 11, double tol = 1e-4);

/// Numeric infima of J and K against the closed-form marginals Ja, Jb, Ka on n-point grids.
CheckResult contraction_check(const ProcessParams& params, int n = 40, double tol = 1e-6);

/// Agreement of adjacent branches at beta = b/3 (J), alpha = ell_a (Ja) and alpha = alpha_a (K, Ka).
CheckResult continuity_check(const ProcessParams& params, double tol = 1e-9);

/// cgf_gradient against central differences at n random interior points,
/// plus the gradient norm at distance 1e-8 from mu = b^2/8.
CheckResult gradient_check(const ProcessParams& params, int n = 50, std::uint64_t seed = 5, double tol = 1e-6);

}  // namespace cirldp
