#include <cmath>
#include <limits>

#include "cirldp/cgf.hpp"
#include "cirldp/io.hpp"
#include "cirldp/optimize.hpp"

namespace cirldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sup over (lambda, gamma) of lambda x + gamma t - cgf_limit at fixed (mu, nu).
double inner_sup(const ProcessParams& p, double x, double t, double mu, double nu, bool* unbounded) {
  auto over_gamma = [&](double lambda) {
    const Max1D r = maximize_concave_1d(
        [&](double gamma) {
          return lambda * x + gamma * t - cgf_limit(p, {lambda, mu, nu, gamma}).value();
        },
        0.0, 1.0);
    return r.unbounded ? kInf : r.f;
  };
  const Max1D r = maximize_concave_1d(over_gamma, 0.0, 1.0);
  *unbounded = r.unbounded;
  return r.f;
}

ExtReal transform(const ProcessParams& p, double x, double y, double z, double t, bool quadruplet) {
  bool diverged = false;
  auto objective = [&](const Vec2& v) {
    const double mu = v[0];
    const double nu = v[1];
    if (!(mu < p.b * p.b / 8.0) || !(nu < (p.a - 2.0) * (p.a - 2.0) / 8.0))
      return -std::numeric_limits<double>::infinity();
    double rest;
    if (quadruplet) {
      bool unbounded = false;
      rest = inner_sup(p, x, t, mu, nu, &unbounded);
      if (unbounded) diverged = true;
    } else {
      rest = -cgf_limit(p, {0.0, mu, nu, 0.0}).value();
    }
    return y * mu + z * nu + rest;
  };
  Newton2DOptions opts;
  opts.tolerance = 1e-13;
  double best = -kInf;
  const Vec2 starts[] = {{0.0, 0.0}, {-0.5 * p.b * p.b, -0.5 * (p.a - 2.0) * (p.a - 2.0)}};
  for (const Vec2& s : starts) {
    const Max2D r = maximize_concave_2d(objective, s, opts);
    if (diverged || r.unbounded) return ExtReal::infinity();
    best = std::max(best, r.f);
  }
  return best;
}

}  // namespace

ExtReal legendre_transform_numeric(const ProcessParams& p, double x, double y, double z, double t) {
  return transform(p, x, y, z, t, true);
}

ExtReal legendre_transform_pair_numeric(const ProcessParams& p, double x, double y) {
  return transform(p, 0.0, x, y, 0.0, false);
}

nlohmann::json duality_report(const ProcessParams& p, double x, double y, double z, double t) {
  const ExtReal closed = lambda_star(p, x, y, z, t);
  const ExtReal numeric = legendre_transform_numeric(p, x, y, z, t);
  nlohmann::json j;
  j["point"] = {x, y, z, t};
  j["closed_form"] = ext_to_json(closed);
  j["numeric"] = ext_to_json(numeric);
  if (closed.is_finite() && numeric.is_finite())
    j["abs_diff"] = std::abs(closed.value() - numeric.value());
  else
    j["abs_diff"] = closed == numeric ? nlohmann::json(0.0) : nlohmann::json("inf");
  return j;
}

}  // namespace cirldp
