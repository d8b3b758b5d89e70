#include "cirldp/cgf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cirldp/batch.hpp"
#include "cirldp/errors.hpp"

namespace cirldp {

namespace {

double mu_bound(const ProcessParams& p) { return p.b * p.b / 8.0; }
double nu_bound(const ProcessParams& p) { return (p.a - 2.0) * (p.a - 2.0) / 8.0; }

}  // namespace

DualVars dual_vars(const ProcessParams& p, double mu, double nu) {
  if (!(mu < mu_bound(p)) || !(nu < nu_bound(p))) throw DomainError("dual_vars: (mu, nu) outside the domain");
  return DualVars{std::sqrt(p.b * p.b - 8.0 * mu), 0.5 * std::sqrt((p.a - 2.0) * (p.a - 2.0) - 8.0 * nu),
                  p.a + 2.0};
}

bool in_cgf_domain(const ProcessParams& p, const CgfPoint& q) {
  return q.mu < mu_bound(p) && q.nu < nu_bound(p);
}

ExtReal cgf_limit(const ProcessParams& p, const CgfPoint& q) {
  if (!in_cgf_domain(p, q)) return ExtReal::infinity();
  const DualVars dv = dual_vars(p, q.mu, q.nu);
  const double base = -0.5 * dv.d * (1.0 + dv.f) - p.a * p.b / 4.0;
  const double lp = std::max(q.lambda, 0.0);
  const double gm = std::min(q.gamma, 0.0);
  return base + std::max(lp * lp / (dv.d - p.b), gm * gm / dv.phi());
}

std::array<double, 4> cgf_gradient(const ProcessParams& p, const CgfPoint& q) {
  if (!(mu_bound(p) - q.mu > kBoundaryTolerance) || !(nu_bound(p) - q.nu > kBoundaryTolerance))
    throw BoundaryError("cgf_gradient: point on or near the domain boundary");
  const DualVars dv = dual_vars(p, q.mu, q.nu);
  const double d = dv.d;
  const double f = dv.f;
  const double phi = dv.phi();
  const double D = d - p.b;
  const double lp = std::max(q.lambda, 0.0);
  const double gm = std::min(q.gamma, 0.0);
  const double first = lp * lp / D;
  const double second = gm * gm / phi;
  if (q.lambda > 0.0 && q.gamma < 0.0 && std::abs(first - second) <= kBoundaryTolerance)
    throw BoundaryError("cgf_gradient: point on the switching surface");
  const bool delta1 = q.lambda > 0.0 && first > second;
  const bool delta2 = q.gamma < 0.0 && second > first;
  std::array<double, 4> g{};
  g[0] = delta1 ? 2.0 * q.lambda / D : 0.0;
  g[1] = 2.0 * (1.0 + f) / d + (delta1 ? 4.0 * q.lambda * q.lambda / (d * D * D) : 0.0);
  g[2] = d / (2.0 * f) + (delta2 ? 2.0 * q.gamma * q.gamma / (f * phi * phi) : 0.0);
  g[3] = delta2 ? 2.0 * q.gamma / phi : 0.0;
  return g;
}

MonteCarloEstimate cgf_finite_T_mc(const ProcessParams& p, const CgfPoint& q, double T,
                                   std::size_t n_paths, std::uint64_t seed, double steps_per_unit) {
  if (q.lambda == 0.0 && q.mu == 0.0 && q.nu == 0.0 && q.gamma == 0.0) return {0.0, 0.0};
  if (n_paths < 2) throw DomainError("cgf_finite_T_mc: need at least two paths");
  const PathBatch batch{p, steps_per_unit, seed, n_paths};
  const auto pf = simulate_functionals(batch, {T}).front();
  std::vector<double> expo(n_paths);
  for (std::size_t i = 0; i < n_paths; ++i) {
    const PathFunctionals& f = pf[i];
    const double e = q.lambda * std::sqrt(f.T * f.xT) + q.mu * f.T * f.S + q.nu * f.T * f.Sigma +
                     q.gamma * f.T * f.curlyL;
    if (!std::isfinite(e)) throw OverflowError("cgf_finite_T_mc: exponent out of range");
    expo[i] = e;
  }
  const double m = *std::max_element(expo.begin(), expo.end());
  double s1 = 0.0;
  double s2 = 0.0;
  for (double e : expo) {
    const double w = std::exp(e - m);
    s1 += w;
    s2 += w * w;
  }
  const double n = static_cast<double>(n_paths);
  const double mean = s1 / n;
  const double var = std::max(0.0, (s2 / n - mean * mean) * n / (n - 1.0));
  const double Tn = pf.front().T;
  return {(m + std::log(mean)) / Tn, std::sqrt(var / n) / mean / Tn};
}

double lambda_star_objective(const ProcessParams& p, double x, double y, double z, double t, double d,
                             double f) {
  const double phi = 2.0 * f + p.a + 2.0;
  const double lead = t * std::sqrt(phi) - x * std::sqrt(d - p.b);
  return 0.25 * lead * lead + y * (p.b * p.b - d * d) / 8.0 +
         ((p.a - 2.0) * (p.a - 2.0) - 4.0 * f * f) * z / 8.0 + 0.5 * d * (1.0 + f) + p.a * p.b / 4.0;
}

LambdaStarResult lambda_star_solve(const ProcessParams& p, double x, double y, double z, double t) {
  LambdaStarResult out;
  if (x < 0.0 || t > 0.0 || y <= 0.0 || z <= 0.0 || y * z - 1.0 <= 0.0) {
    out.value = ExtReal::infinity();
    return out;
  }
  const double at = -t;
  double d = 2.0 * z / (y * z - 1.0);
  double f = 1.0 / (y * z - 1.0);
  double h = lambda_star_objective(p, x, y, z, t, d, f);
  for (int it = 0; it < 200; ++it) {
    out.iterations = it + 1;
    const double D = d - p.b;
    const double phi = 2.0 * f + p.a + 2.0;
    const double sD = std::sqrt(D);
    const double sphi = std::sqrt(phi);
    const double s = x * sD + at * sphi;
    const double gd = s * x / (4.0 * sD) - y * d / 4.0 + 0.5 * (1.0 + f);
    const double gf = s * at / (2.0 * sphi) - z * f + 0.5 * d;
    const double hdd = -x * at * sphi / (8.0 * D * sD) - y / 4.0;
    const double hff = -x * at * sD / (2.0 * phi * sphi) - z;
    const double hdf = x * at / (4.0 * sD * sphi) + 0.5;
    const double det = hdd * hff - hdf * hdf;
    double sd = -(hff * gd - hdf * gf) / det;
    double sf = -(-hdf * gd + hdd * gf) / det;
    const double decrement = sd * gd + sf * gf;
    if (!(decrement > 1e-22 * std::max(1.0, std::abs(h)))) break;
    double step = 1.0;
    bool moved = false;
    for (int k = 0; k < 80; ++k) {
      const double nd = d + step * sd;
      const double nf = f + step * sf;
      if (nd > 0.0 && nf > 0.0) {
        const double nh = lambda_star_objective(p, x, y, z, t, nd, nf);
        if (nh >= h - 1e-15 * std::abs(h)) {
          moved = nd != d || nf != f;
          d = nd;
          f = nf;
          h = nh;
          break;
        }
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  out.value = h;
  out.d = d;
  out.f = f;
  return out;
}

ExtReal lambda_star(const ProcessParams& p, double x, double y, double z, double t) {
  return lambda_star_solve(p, x, y, z, t).value;
}

}  // namespace cirldp
