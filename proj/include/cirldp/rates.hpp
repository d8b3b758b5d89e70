#pragma once

#include <string_view>

#include "cirldp/cir_model.hpp"
#include "cirldp/ext_real.hpp"

namespace cirldp {

/// Constants splitting the branches of the estimator rate functions.
struct RateRegionConstants {
  double ell_a;    // switch point of Ja
  double alpha_a;  // switch point of K and Ka
  double a;

  double C_alpha(double alpha) const { return (a - alpha) * (a - alpha) / 8.0 + 2.0 - alpha; }
  /// Minimizer in beta of K(alpha, .) below alpha_a; carries the sign of b for alpha > 0.
  double beta_b(double alpha, double b) const;
};

RateRegionConstants rate_region_constants(const ProcessParams& params);

/// Rate of S_T.
ExtReal rate_S(const ProcessParams& params, double x);
/// Rate of Sigma_T.
ExtReal rate_Sigma(const ProcessParams& params, double y);
/// Rate of V_T = S_T Sigma_T - 1.
ExtReal rate_V(const ProcessParams& params, double v);
/// Rate of the couple (S_T, Sigma_T).
ExtReal rate_pair(const ProcessParams& params, double x, double y);
/// Rate of (sqrt(X_T/T), S_T, Sigma_T).
ExtReal rate_triplet_x(const ProcessParams& params, double x, double y, double z);
/// Rate of (S_T, Sigma_T, curlyL_T).
ExtReal rate_triplet_L(const ProcessParams& params, double y, double z, double t);

/// Rate of the estimator that drops L_T. +inf for alpha > 2, beta > 0 and
/// alpha < 2, beta < 0 as well as on alpha = 2 away from (2, 0).
ExtReal rate_J(const ProcessParams& params, double alpha, double beta);
/// Rate of the estimator that drops X_T / T.
ExtReal rate_K(const ProcessParams& params, double alpha, double beta);
/// Rate of the maximum likelihood estimator: min(J, K).
ExtReal rate_I_mle(const ProcessParams& params, double alpha, double beta);

enum class Marginal { Ja, Jb, Ka, Kb, Ia, Ib };

Marginal parse_marginal(std::string_view name);
std::string_view to_string(Marginal m);

/// One-dimensional rates of a single estimated coordinate. Kb has no closed
/// form and is a numeric infimum of rate_K over alpha.
ExtReal rate_marginal(const ProcessParams& params, Marginal which, double v);

struct InfSupOptions {
  int starts = 16;
  double tolerance = 1e-10;
};

/// The MLE rate as inf over (x, t) of the Legendre transform of the limiting
/// CGF along the preimage of (alpha, beta). Throws DomainError outside the
/// admissible region other than at (0, 0) and (2, 0).
ExtReal rate_I_infsup(const ProcessParams& params, double alpha, double beta,
                      const InfSupOptions& opts = {});

}  // namespace cirldp
