#include "cirldp/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

namespace cirldp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double sanitize(double v) { return std::isnan(v) ? kNegInf : v; }

}  // namespace

Max1D maximize_concave_1d(const std::function<double(double)>& f, double x0, double step,
                          double divergence) {
  auto g = [&](double x) { return sanitize(f(x)); };
  double fb = g(x0);
  if (fb > divergence) return {x0, fb, true};
  double b = x0;
  double h = std::max(std::abs(step), 1e-12);
  double fr = g(b + h);
  double fl = g(b - h);
  double lo = b - h;
  double hi = b + h;
  if (fr > fb || fl > fb) {
    const double dir = fr >= fl ? 1.0 : -1.0;
    double prev = b - dir * h;
    b += dir * h;
    fb = std::max(fr, fl);
    for (int i = 0; i < 200; ++i) {
      if (fb > divergence) return {b, fb, true};
      h *= 2.0;
      const double next = b + dir * h;
      const double fn = g(next);
      if (!(fn > fb)) {
        lo = std::min(prev, next);
        hi = std::max(prev, next);
        break;
      }
      prev = b;
      b = next;
      fb = fn;
      if (i == 199) return {b, fb, true};
    }
  }
  // Golden section: robust at kinks, where parabolic steps stall.
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = g(c);
  double fd = g(d);
  for (int i = 0; i < 300; ++i) {
    if (hi - lo <= 1e-14 * (std::abs(c) + std::abs(d)) + 1e-300) break;
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = g(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = g(d);
    }
  }
  const double xm = fc >= fd ? c : d;
  const double fm = std::max(fc, fd);
  if (fm >= fb) return {xm, fm, false};
  return {b, fb, false};
}

namespace {

struct Derivs {
  double f;
  Vec2 grad;
  double hxx, hyy, hxy;
  bool ok;
};

Derivs finite_differences(const std::function<double(const Vec2&)>& f, const Vec2& x, double fx,
                          double rel) {
  Derivs d{fx, {0.0, 0.0}, 0.0, 0.0, 0.0, true};
  const double h0 = rel * std::max(1.0, std::abs(x[0]));
  const double h1 = rel * std::max(1.0, std::abs(x[1]));
  auto at = [&](double dx, double dy) { return sanitize(f({x[0] + dx, x[1] + dy})); };
  const double fp0 = at(h0, 0), fm0 = at(-h0, 0), fp1 = at(0, h1), fm1 = at(0, -h1);
  const double fpp = at(h0, h1), fmm = at(-h0, -h1), fpm = at(h0, -h1), fmp = at(-h0, h1);
  for (double v : {fp0, fm0, fp1, fm1, fpp, fmm, fpm, fmp})
    if (!std::isfinite(v)) d.ok = false;
  if (!d.ok) return d;
  d.grad = {(fp0 - fm0) / (2 * h0), (fp1 - fm1) / (2 * h1)};
  d.hxx = (fp0 - 2 * fx + fm0) / (h0 * h0);
  d.hyy = (fp1 - 2 * fx + fm1) / (h1 * h1);
  d.hxy = (fpp - fpm - fmp + fmm) / (4 * h0 * h1);
  return d;
}

}  // namespace

Max2D maximize_concave_2d(const std::function<double(const Vec2&)>& f, Vec2 x,
                          const Newton2DOptions& opts) {
  Max2D out;
  double fx = sanitize(f(x));
  for (int it = 0; it < opts.max_iterations; ++it) {
    out.iterations = it + 1;
    if (fx > opts.divergence) return {x, fx, true, it};
    double rel = opts.fd_step;
    Derivs d = finite_differences(f, x, fx, rel);
    while (!d.ok && rel > 1e-10) {
      rel *= 0.1;
      d = finite_differences(f, x, fx, rel);
    }
    if (!d.ok) break;
    // Newton direction for the negated Hessian; fall back to the gradient
    // when the Hessian is not negative definite.
    Vec2 dir;
    const double det = d.hxx * d.hyy - d.hxy * d.hxy;
    if (d.hxx < 0 && d.hyy < 0 && det > 0) {
      dir = {-(d.hyy * d.grad[0] - d.hxy * d.grad[1]) / det,
             -(-d.hxy * d.grad[0] + d.hxx * d.grad[1]) / det};
    } else {
      dir = d.grad;
    }
    double slope = dir[0] * d.grad[0] + dir[1] * d.grad[1];
    if (!(slope > 0)) {
      dir = d.grad;
      slope = dir[0] * dir[0] + dir[1] * dir[1];
    }
    if (slope == 0.0) break;
    double step = 1.0;
    bool accepted = false;
    Vec2 best = x;
    double fbest = fx;
    for (int k = 0; k < 60; ++k) {
      const Vec2 trial{x[0] + step * dir[0], x[1] + step * dir[1]};
      const double ft = sanitize(f(trial));
      if (ft > fx) {
        best = trial;
        fbest = ft;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const double gain = fbest - fx;
    x = best;
    fx = fbest;
    if (gain < opts.tolerance * std::max(1.0, std::abs(fx))) break;
  }
  out.x = x;
  out.f = fx;
  out.unbounded = fx > opts.divergence;
  return out;
}

Min1D minimize_scan_1d(const std::function<double(double)>& f, double lo, double hi, int n) {
  auto g = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  int arg = 0;
  double best = std::numeric_limits<double>::infinity();
  const double h = (hi - lo) / n;
  for (int i = 0; i <= n; ++i) {
    const double v = g(lo + h * i);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  const double x0 = lo + h * arg;
  if (!std::isfinite(best)) return {x0, best};
  const auto res = boost::math::tools::brent_find_minima(g, lo + h * std::max(arg - 1, 0),
                                                         lo + h * std::min(arg + 1, n), 60);
  if (res.second < best) return {res.first, res.second};
  return {x0, best};
}

Min2D minimize_nelder_mead(const std::function<double(const Vec2&)>& f, Vec2 x0, double scale,
                           double tolerance, int max_evaluations) {
  std::array<Vec2, 3> p{x0, Vec2{x0[0] + scale, x0[1]}, Vec2{x0[0], x0[1] + scale}};
  std::array<double, 3> v{};
  int evals = 0;
  auto eval = [&](const Vec2& x) {
    ++evals;
    const double r = f(x);
    return std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
  };
  for (int i = 0; i < 3; ++i) v[i] = eval(p[i]);
  while (evals < max_evaluations) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int l, int r) { return v[l] < v[r]; });
    const int best = idx[0], mid = idx[1], worst = idx[2];
    const double spread = std::abs(v[worst] - v[best]);
    const double size = std::max(std::abs(p[worst][0] - p[best][0]), std::abs(p[worst][1] - p[best][1]));
    if (std::isfinite(v[worst]) && spread <= tolerance * (1.0 + std::abs(v[best])) && size < 1e-9) break;
    if (size < 1e-14) break;
    const Vec2 c{0.5 * (p[best][0] + p[mid][0]), 0.5 * (p[best][1] + p[mid][1])};
    auto along = [&](double t) { return Vec2{c[0] + t * (p[worst][0] - c[0]), c[1] + t * (p[worst][1] - c[1])}; };
    const Vec2 xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < v[best]) {
      const Vec2 xe = along(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        p[worst] = xe;
        v[worst] = fe;
      } else {
        p[worst] = xr;
        v[worst] = fr;
      }
    } else if (fr < v[mid]) {
      p[worst] = xr;
      v[worst] = fr;
    } else {
      const bool outside = fr < v[worst];
      const Vec2 xc = along(outside ? -0.5 : 0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : v[worst])) {
        p[worst] = xc;
        v[worst] = fc;
      } else {
        for (int i : {mid, worst}) {
          p[i] = {p[best][0] + 0.5 * (p[i][0] - p[best][0]), p[best][1] + 0.5 * (p[i][1] - p[best][1])};
          v[i] = eval(p[i]);
        }
      }
    }
  }
  int b = 0;
  for (int i = 1; i < 3; ++i)
    if (v[i] < v[b]) b = i;
  return {p[b], v[b], evals};
}

}  // namespace cirldp
