#include "cirldp/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "cirldp/errors.hpp"

namespace cirldp {

namespace {

const ExtReal kInf = ExtReal::infinity();

double sq(double v) { return v * v; }

// Value of K at (0, 0), shared by K, Ka and Kb.
double k_origin(const ProcessParams& p) { return -p.b / 4.0 * (4.0 - p.a + std::sqrt(p.a * p.a + 16.0)); }

}  // namespace

double RateRegionConstants::beta_b(double alpha, double b) const {
  return b * alpha / std::sqrt(16.0 * std::sqrt(2.0 * C_alpha(alpha)) + a * a - 8.0 * alpha + 32.0);
}

RateRegionConstants rate_region_constants(const ProcessParams& p) {
  RateRegionConstants c{};
  c.a = p.a;
  c.ell_a = 10.0 / 9.0 + std::sqrt(64.0 + 9.0 * sq(p.a - 2.0)) / 9.0;
  c.alpha_a = -2.0 / 3.0 * (p.a / 2.0 - 2.0 - std::sqrt(p.a * p.a - 2.0 * p.a + 4.0));
  return c;
}

ExtReal rate_S(const ProcessParams& p, double x) {
  if (!(x > 0.0)) return kInf;
  return sq(p.a + p.b * x) / (8.0 * x);
}

ExtReal rate_Sigma(const ProcessParams& p, double y) {
  if (!(y > 0.0)) return kInf;
  return sq((p.a - 2.0) * y + p.b) / (8.0 * y);
}

ExtReal rate_V(const ProcessParams& p, double v) {
  if (!(v > 0.0)) return kInf;
  return -p.b / 4.0 * std::sqrt((v + 1.0) * (sq(p.a - 2.0) + 4.0 / v)) + p.a * p.b / 4.0;
}

ExtReal rate_pair(const ProcessParams& p, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !(x * y - 1.0 > 0.0)) return kInf;
  return y / (2.0 * (x * y - 1.0)) + sq(p.b) * x / 8.0 + sq(p.a - 2.0) * y / 8.0 + p.a * p.b / 4.0;
}

ExtReal rate_triplet_x(const ProcessParams& p, double x, double y, double z) {
  if (!(x >= 0.0) || !(y > 0.0) || !(z > 0.0) || !(y * z - 1.0 > 0.0)) return kInf;
  return p.a * p.b / 4.0 + sq(p.b) * y / 8.0 + sq(p.a - 2.0) * z / 8.0 - p.b * x * x / 4.0 +
         sq(x * x + 2.0) * z / (8.0 * (y * z - 1.0));
}

ExtReal rate_triplet_L(const ProcessParams& p, double y, double z, double t) {
  if (!(t <= 0.0) || !(y > 0.0) || !(z > 0.0) || !(y * z - 1.0 > 0.0)) return kInf;
  return p.a * p.b / 4.0 + sq(p.b) * y / 8.0 + sq(p.a - 2.0) * z / 8.0 + p.a * t * t / 4.0 +
         (4.0 * z * (y * t * t + 1.0) + t * t * t * t * y) / (8.0 * (y * z - 1.0));
}

ExtReal rate_J(const ProcessParams& p, double alpha, double beta) {
  const double a = p.a;
  const double b = p.b;
  if (alpha == 2.0 && beta == 0.0) return -b;
  const bool branch_a = (alpha > 2.0 && b / 3.0 <= beta && beta < 0.0) || (alpha < 2.0 && beta > 0.0);
  const bool branch_b = alpha > 2.0 && beta < b / 3.0;
  if (!branch_a && !branch_b) return kInf;
  const double lead =
      sq(a - 2.0) * beta / (8.0 * (2.0 - alpha)) * sq(1.0 + (2.0 - alpha) * b / (beta * (a - 2.0)));
  if (branch_a) return lead + 2.0 * beta - b;
  return lead - beta / 4.0 * sq(1.0 - b / beta);
}

ExtReal rate_K(const ProcessParams& p, double alpha, double beta) {
  const double a = p.a;
  const double b = p.b;
  if (alpha == 0.0 && beta == 0.0) return k_origin(p);
  const RateRegionConstants c = rate_region_constants(p);
  const bool branch_1 = (beta < 0.0 && 0.0 < alpha && alpha <= c.alpha_a) || (beta > 0.0 && alpha < 0.0);
  const bool branch_2 = beta < 0.0 && alpha > c.alpha_a;
  if (!branch_1 && !branch_2) return kInf;
  const double common = a / 4.0 * (b - beta) - alpha / (8.0 * beta) * (b * b - beta * beta);
  if (branch_1) return common - beta / alpha * sq(std::sqrt(2.0) + std::sqrt(c.C_alpha(alpha)));
  return common - beta * sq(a - alpha) / (8.0 * (alpha - 2.0));
}

ExtReal rate_I_mle(const ProcessParams& p, double alpha, double beta) {
  return min(rate_J(p, alpha, beta), rate_K(p, alpha, beta));
}

Marginal parse_marginal(std::string_view name) {
  if (name == "Ja") return Marginal::Ja;
  if (name == "Jb") return Marginal::Jb;
  if (name == "Ka") return Marginal::Ka;
  if (name == "Kb") return Marginal::Kb;
  if (name == "Ia") return Marginal::Ia;
  if (name == "Ib") return Marginal::Ib;
  throw ConfigError("which", "unknown marginal rate '" + std::string(name) + "'");
}

std::string_view to_string(Marginal m) {
  switch (m) {
    case Marginal::Ja: return "Ja";
    case Marginal::Jb: return "Jb";
    case Marginal::Ka: return "Ka";
    case Marginal::Kb: return "Kb";
    case Marginal::Ia: return "Ia";
    case Marginal::Ib: return "Ib";
  }
  return "Ja";
}

namespace {

ExtReal marginal_Ja(const ProcessParams& p, double alpha) {
  const RateRegionConstants c = rate_region_constants(p);
  if (alpha <= c.ell_a) return p.b / 4.0 * (p.a - 6.0 - std::sqrt(sq(p.a - 2.0) + 16.0 * (2.0 - alpha)));
  return p.b / 4.0 * (p.a - std::sqrt(alpha * (sq(p.a - 2.0) / (alpha - 2.0) + 2.0)));
}

ExtReal marginal_Jb(const ProcessParams& p, double beta) {
  if (beta <= p.b / 3.0) return -beta / 4.0 * sq(1.0 - p.b / beta);
  return 2.0 * beta - p.b;
}

ExtReal marginal_Ka(const ProcessParams& p, double alpha) {
  const RateRegionConstants c = rate_region_constants(p);
  if (alpha == 0.0) return k_origin(p);
  if (alpha < c.alpha_a) return rate_K(p, alpha, c.beta_b(alpha, p.b));
  return p.b / 4.0 * (p.a - std::sqrt(alpha * (sq(p.a - 2.0) / (alpha - 2.0) + 2.0)));
}

// inf over alpha of K(alpha, beta) on the half-line where K is finite.
ExtReal marginal_Kb(const ProcessParams& p, double beta) {
  if (beta == 0.0) return k_origin(p);
  constexpr double eps = 1e-8;
  const double sign = beta < 0.0 ? 1.0 : -1.0;
  auto k_at = [&](double s) { return rate_K(p, sign * s, beta).value(); };
  // Grow the bracket until K exceeds the best value seen by 10.
  double best_s = 1.0;
  double best = k_at(best_s);
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    hi *= 2.0;
    const double v = k_at(hi);
    if (v < best) {
      best = v;
      best_s = hi;
    } else if (v > best + 10.0) {
      break;
    }
  }
  // Coarse log-spaced scan, then Brent around the best node.
  const int n = 400;
  const double llo = std::log(eps);
  const double lhi = std::log(hi);
  std::vector<double> grid(n + 1);
  int arg = 0;
  double fbest = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    grid[i] = std::exp(llo + (lhi - llo) * i / n);
    const double v = k_at(grid[i]);
    if (v < fbest) {
      fbest = v;
      arg = i;
    }
  }
  const double lo_s = grid[std::max(arg - 1, 0)];
  const double hi_s = grid[std::min(arg + 1, n)];
  const auto res = boost::math::tools::brent_find_minima(k_at, lo_s, hi_s, 50);
  return std::min(res.second, fbest);
}

}  // namespace

ExtReal rate_marginal(const ProcessParams& p, Marginal which, double v) {
  switch (which) {
    case Marginal::Ja: return marginal_Ja(p, v);
    case Marginal::Jb: return marginal_Jb(p, v);
    case Marginal::Ka: return marginal_Ka(p, v);
    case Marginal::Kb: return marginal_Kb(p, v);
    case Marginal::Ia: return min(marginal_Ja(p, v), marginal_Ka(p, v));
    case Marginal::Ib: return min(marginal_Jb(p, v), marginal_Kb(p, v));
  }
  return kInf;
}

}  // namespace cirldp
