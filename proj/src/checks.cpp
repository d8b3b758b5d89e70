#include "cirldp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cirldp/cgf.hpp"
#include "cirldp/harness.hpp"
#include "cirldp/io.hpp"
#include "cirldp/optimize.hpp"
#include "cirldp/rates.hpp"
#include "cirldp/rng.hpp"

namespace cirldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double diff(ExtReal l, ExtReal r) {
  if (l.is_infinite() && r.is_infinite()) return 0.0;
  return std::abs(l.value() - r.value());
}

}  // namespace

CheckResult duality_check(const ProcessParams& p, int n_quad, int n_pair, double tol) {
  CheckResult res;
  double worst_quad = 0.0;
  nlohmann::json worst_point;
  const auto xs = linspace(0.0, 1.0, n_quad);
  const auto ys = linspace(3.0, 6.0, n_quad);
  const auto zs = linspace(0.5, 1.5, n_quad);
  const auto ts = linspace(-1.0, 0.0, n_quad);
  for (double x : xs)
    for (double y : ys)
      for (double z : zs)
        for (double t : ts) {
          const double d = diff(lambda_star(p, x, y, z, t), legendre_transform_numeric(p, x, y, z, t));
          if (d > worst_quad || worst_point.is_null()) {
            worst_quad = std::max(worst_quad, d);
            worst_point = duality_report(p, x, y, z, t);
          }
        }
  double worst_pair = 0.0;
  for (double x : linspace(2.5, 7.0, n_pair))
    for (double y : linspace(0.45, 1.5, n_pair))
      worst_pair = std::max(worst_pair, diff(rate_pair(p, x, y), legendre_transform_pair_numeric(p, x, y)));
  res.pass = worst_quad <= tol && worst_pair <= tol;
  res.metrics = {{"quadruplet_points", n_quad * n_quad * n_quad * n_quad},
                 {"quadruplet_max_abs_diff", worst_quad},
                 {"worst_quadruplet", worst_point},
                 {"pair_points", n_pair * n_pair},
                 {"pair_max_abs_diff", worst_pair},
                 {"tolerance", tol}};
  return res;
}

std::vector<std::array<double, 2>> infsup_reference_points() {
  return {{-2.0, 0.5}, {-1.0, 1.0}, {0.0, 0.5},  {-0.5, 2.0}, {-3.0, 3.0}, {0.0, 1.5},  {-1.5, 0.2}, {-0.2, 0.8},
          {0.5, -1.0}, {1.0, -0.5}, {1.5, -2.0}, {1.0, 0.5},  {0.5, 1.0},  {1.5, 0.3},  {1.8, -0.2}, {0.2, 2.0},
          {1.2, -3.0}, {0.8, 0.1},  {2.0, -1.0}, {2.0, -0.5}, {3.0, -2.0}, {4.0, -1.0}, {5.0, -3.0}, {2.5, -0.2},
          {3.0, -0.3}, {6.0, -1.5}, {4.0, -4.0}, {8.0, -0.7}, {2.2, -2.5}, {3.5, -0.9}};
}

CheckResult infsup_check(const ProcessParams& p, const std::vector<std::array<double, 2>>& points, int n_random,
                         std::uint64_t seed, double tol) {
  CheckResult res;
  double worst_eq = 0.0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [al, be] : points) {
    const ExtReal is = rate_I_infsup(p, al, be);
    const ExtReal mm = rate_I_mle(p, al, be);
    const double d = diff(is, mm);
    worst_eq = std::max(worst_eq, d);
    rows.push_back({{"alpha", al}, {"beta", be}, {"infsup", ext_to_json(is)}, {"min_JK", ext_to_json(mm)}, {"abs_diff", d}});
  }
  Philox4x32 rng(seed);
  std::uniform_real_distribution<double> ua(-3.0, 8.0);
  std::uniform_real_distribution<double> ub(-4.0, 3.0);
  double worst_excess = -kInf;
  int sampled = 0;
  while (sampled < n_random) {
    const double al = ua(rng);
    const double be = ub(rng);
    const bool admissible = (al <= 0.0 && be > 0.0) || (al > 0.0 && al < 2.0) || (al >= 2.0 && be < 0.0);
    if (!admissible) continue;
    ++sampled;
    const ExtReal is = rate_I_infsup(p, al, be);
    const ExtReal mm = rate_I_mle(p, al, be);
    if (mm.is_infinite()) continue;
    worst_excess = std::max(worst_excess, is.value() - mm.value());
  }
  res.pass = worst_eq <= tol && worst_excess <= tol;
  res.metrics = {{"points", rows},
                 {"max_abs_diff", worst_eq},
                 {"random_points", n_random},
                 {"max_excess_over_min", worst_excess},
                 {"tolerance", tol}};
  return res;
}

namespace {

// inf over one free coordinate: both half-lines on a log scale, plus the origin.
double numeric_infimum(const std::function<double(double)>& f, double center) {
  double best = f(center);
  for (double sign : {-1.0, 1.0}) {
    const Min1D r = minimize_scan_1d([&](double s) { return f(center + sign * std::exp(s)); }, -14.0, 6.0, 4000);
    best = std::min(best, r.f);
  }
  return best;
}

}  // namespace

CheckResult contraction_check(const ProcessParams& p, int n, double tol) {
  CheckResult res;
  double worst_ja = 0.0;
  double worst_jb = 0.0;
  double worst_ka = 0.0;
  for (double al : linspace(-2.0, 8.0, n)) {
    const double ja = numeric_infimum([&](double be) { return rate_J(p, al, be).value(); }, 0.0);
    const double ka = numeric_infimum([&](double be) { return rate_K(p, al, be).value(); }, 0.0);
    worst_ja = std::max(worst_ja, diff(ja, rate_marginal(p, Marginal::Ja, al)));
    worst_ka = std::max(worst_ka, diff(ka, rate_marginal(p, Marginal::Ka, al)));
  }
  for (double be : linspace(-4.0, 2.0, n)) {
    const double jb = numeric_infimum([&](double al) { return rate_J(p, al, be).value(); }, 2.0);
    worst_jb = std::max(worst_jb, diff(jb, rate_marginal(p, Marginal::Jb, be)));
  }
  res.pass = worst_ja <= tol && worst_jb <= tol && worst_ka <= tol;
  res.metrics = {{"grid_points", n},
                 {"Ja_max_abs_diff", worst_ja},
                 {"Jb_max_abs_diff", worst_jb},
                 {"Ka_max_abs_diff", worst_ka},
                 {"tolerance", tol}};
  return res;
}

CheckResult continuity_check(const ProcessParams& p, double tol) {
  CheckResult res;
  const RateRegionConstants c = rate_region_constants(p);
  constexpr double eps = 1e-12;
  double jump_J = 0.0;
  for (double al : {2.5, 3.0, 4.0, 6.0}) {
    const double at = p.b / 3.0;
    jump_J = std::max(jump_J, diff(rate_J(p, al, at), rate_J(p, al, at - eps)));
  }
  double jump_K = 0.0;
  for (double be : {-0.25, -0.5, -1.0, -2.0, -4.0}) {
    jump_K = std::max(jump_K, diff(rate_K(p, c.alpha_a, be), rate_K(p, c.alpha_a + eps, be)));
  }
  const double jump_Ja =
      diff(rate_marginal(p, Marginal::Ja, c.ell_a), rate_marginal(p, Marginal::Ja, c.ell_a + eps));
  const double jump_Ka =
      diff(rate_marginal(p, Marginal::Ka, c.alpha_a - eps), rate_marginal(p, Marginal::Ka, c.alpha_a));
  res.pass = jump_J <= tol && jump_K <= tol && jump_Ja <= tol && jump_Ka <= tol;
  res.metrics = {{"J_at_b_over_3", jump_J},
                 {"K_at_alpha_a", jump_K},
                 {"Ja_at_ell_a", jump_Ja},
                 {"Ka_at_alpha_a", jump_Ka},
                 {"ell_a", c.ell_a},
                 {"alpha_a", c.alpha_a},
                 {"tolerance", tol}};
  return res;
}

CheckResult gradient_check(const ProcessParams& p, int n, std::uint64_t seed, double tol) {
  CheckResult res;
  Philox4x32 rng(seed);
  const double mu_max = p.b * p.b / 8.0;
  const double nu_max = (p.a - 2.0) * (p.a - 2.0) / 8.0;
  std::uniform_real_distribution<double> ul(-2.0, 2.0);
  std::uniform_real_distribution<double> um(-3.0, mu_max - 0.05);
  std::uniform_real_distribution<double> un(-3.0, nu_max - 0.05);
  double worst = 0.0;
  int done = 0;
  const double h = 1e-6;
  while (done < n) {
    const CgfPoint q{ul(rng), um(rng), un(rng), ul(rng)};
    // Keep central differences off the switching surface.
    const DualVars dv = dual_vars(p, q.mu, q.nu);
    const double gap = std::max(q.lambda, 0.0) * std::max(q.lambda, 0.0) / (dv.d - p.b) -
                       std::min(q.gamma, 0.0) * std::min(q.gamma, 0.0) / dv.phi();
    if (q.lambda > 0.0 && q.gamma < 0.0 && std::abs(gap) < 1e-3) continue;
    ++done;
    const auto g = cgf_gradient(p, q);
    for (int k = 0; k < 4; ++k) {
      CgfPoint up = q;
      CgfPoint dn = q;
      double* u[] = {&up.lambda, &up.mu, &up.nu, &up.gamma};
      double* d[] = {&dn.lambda, &dn.mu, &dn.nu, &dn.gamma};
      *u[k] += h;
      *d[k] -= h;
      const double fd = (cgf_limit(p, up).value() - cgf_limit(p, dn).value()) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - g[k]) / std::max(1.0, std::abs(g[k])));
    }
  }
  const auto steep = cgf_gradient(p, {0.0, mu_max - 1e-8, 0.0, 0.0});
  const double norm = std::sqrt(steep[0] * steep[0] + steep[1] * steep[1] + steep[2] * steep[2] + steep[3] * steep[3]);
  res.pass = worst <= tol && norm > 1e3;
  res.metrics = {{"points", n}, {"max_relative_error", worst}, {"steep_gradient_norm", norm}, {"tolerance", tol}};
  return res;
}

}  // namespace cirldp
