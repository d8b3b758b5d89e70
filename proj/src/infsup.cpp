#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cirldp/cgf.hpp"
#include "cirldp/errors.hpp"
#include "cirldp/optimize.hpp"
#include "cirldp/rates.hpp"

namespace cirldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimizes f over R^2 from the best nodes of a seed grid plus extra seeds.
double multistart_min(const std::function<double(const Vec2&)>& f, const std::vector<Vec2>& extra,
                      Vec2 lo, Vec2 hi, const InfSupOptions& opts) {
  struct Node {
    double v;
    Vec2 x;
  };
  std::vector<Node> nodes;
  const int n = 30;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Vec2 x{lo[0] + (hi[0] - lo[0]) * i / n, lo[1] + (hi[1] - lo[1]) * j / n};
      const double v = f(x);
      if (std::isfinite(v)) nodes.push_back({v, x});
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& l, const Node& r) { return l.v < r.v; });
  std::vector<Vec2> seeds;
  for (const Vec2& e : extra)
    if (std::isfinite(f(e))) seeds.push_back(e);
  for (const Node& nd : nodes) {
    if (static_cast<int>(seeds.size()) >= opts.starts) break;
    seeds.push_back(nd.x);
  }
  double best = kInf;
  const double scale = 0.05 * std::max(hi[0] - lo[0], hi[1] - lo[1]);
  for (const Vec2& s : seeds) {
    Min2D r = minimize_nelder_mead(f, s, scale, opts.tolerance);
    // One restart from the optimum shakes off premature simplex collapse.
    r = minimize_nelder_mead(f, r.x, 0.1 * scale, opts.tolerance);
    best = std::min(best, r.f);
  }
  return best;
}

}  // namespace

ExtReal rate_I_infsup(const ProcessParams& p, double alpha, double beta, const InfSupOptions& opts) {
  if (alpha == 0.0 && beta == 0.0) return rate_K(p, 0.0, 0.0);
  if (alpha == 2.0 && beta == 0.0) return rate_J(p, 2.0, 0.0);
  const bool d1 = alpha <= 0.0 && beta > 0.0;
  const bool d2 = alpha > 0.0 && alpha < 2.0;
  const bool d3 = alpha >= 2.0 && beta < 0.0;
  if (!d1 && !d2 && !d3) throw DomainError("rate_I_infsup: (alpha, beta) outside the admissible region");

  const double span = 3.0 * (1.0 + std::sqrt(std::abs(alpha)) + std::sqrt(std::abs(beta)));
  auto ls = [&](double x, double y, double z, double t) { return lambda_star(p, x, y, z, t).value(); };

  if (alpha == 2.0) {
    // The preimage pins t^2 = -beta and leaves z free.
    const double t = -std::sqrt(-beta);
    auto f = [&](const Vec2& v) {
      const double x = v[0] * v[0];
      return ls(x, (x * x - alpha) / beta, std::exp(v[1]), t);
    };
    return multistart_min(f, {}, {0.0, -6.0}, {span, 6.0}, opts);
  }
  if (beta == 0.0) {
    // The preimage pins x^2 = alpha and leaves y free.
    const double x = std::sqrt(alpha);
    auto f = [&](const Vec2& v) {
      const double t = -v[1] * v[1];
      return ls(x, std::exp(v[0]), t * t / (2.0 - alpha), t);
    };
    return multistart_min(f, {}, {-6.0, 0.0}, {6.0, span}, opts);
  }

  auto f = [&](const Vec2& v) {
    const double x = v[0] * v[0];
    const double t = -v[1] * v[1];
    return ls(x, (x * x - alpha) / beta, (t * t + beta) / (2.0 - alpha), t);
  };
  // Seeds on the two slices x = 0 and t = 0.
  std::vector<Vec2> extra;
  const Min1D on_x0 = minimize_scan_1d([&](double w) { return f({0.0, w}); }, 0.0, span);
  const Min1D on_t0 = minimize_scan_1d([&](double u) { return f({u, 0.0}); }, 0.0, span);
  extra.push_back({0.0, on_x0.x});
  extra.push_back({on_t0.x, 0.0});
  const double best = multistart_min(f, extra, {0.0, 0.0}, {span, span}, opts);
  return std::min({best, on_x0.f, on_t0.f});
}

}  // namespace cirldp
