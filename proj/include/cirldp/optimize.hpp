#pragma once

#include <array>
#include <functional>

namespace cirldp {

/// Result of a one-dimensional maximization. `unbounded` means the
/// objective exceeded the divergence level along the search direction.
struct Max1D {
  double x = 0.0;
  double f = 0.0;
  bool unbounded = false;
};

inline constexpr double kDivergenceLevel = 1e8;

/// Maximizes a concave function on the real line: bracket by step doubling
/// from `x0`, then golden section inside the bracket. Non-finite values are
/// treated as -inf (outside the domain).
Max1D maximize_concave_1d(const std::function<double(double)>& f, double x0, double step,
                          double divergence = kDivergenceLevel);

using Vec2 = std::array<double, 2>;

struct Max2D {
  Vec2 x{};
  double f = 0.0;
  bool unbounded = false;
  int iterations = 0;
};

struct Newton2DOptions {
  double fd_step = 1e-4;        // relative finite-difference step
  double tolerance = 1e-12;     // stop when the accepted increase falls below this
  int max_iterations = 200;
  double divergence = kDivergenceLevel;
};

/// Damped Newton ascent for a concave function of two variables whose
/// derivatives are taken by central differences. Values that are not finite
/// mark points outside the domain; steps landing there are halved.
Max2D maximize_concave_2d(const std::function<double(const Vec2&)>& f, Vec2 x0,
                          const Newton2DOptions& opts = {});

struct Min1D {
  double x = 0.0;
  double f = 0.0;
};

/// Global-ish minimization on [lo, hi]: uniform scan of n intervals, then
/// Brent's method around the best node.
Min1D minimize_scan_1d(const std::function<double(double)>& f, double lo, double hi, int n = 400);

struct Min2D {
  Vec2 x{};
  double f = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead simplex minimization. +inf values are allowed and act as a barrier.
Min2D minimize_nelder_mead(const std::function<double(const Vec2&)>& f, Vec2 x0, double scale,
                           double tolerance = 1e-10, int max_evaluations = 4000);

}  // namespace cirldp
