#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "cirldp/cgf.hpp"
#include "cirldp/errors.hpp"
#include "cirldp/rng.hpp"
#include "oracles.hpp"

using namespace cirldp;

namespace {

const ProcessParams kP{4.0, -1.0, 1.0};

CgfPoint random_interior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> mu(-3.0, 0.12), nu(-3.0, 0.49);
  return {u(rng), mu(rng), nu(rng), u(rng)};
}

}  // namespace

TEST_CASE("limiting CGF at named points") {
  CHECK(cgf_limit(kP, {0, 0, 0, 0}).value() == Catch::Approx(0.0).margin(1e-15));
  CHECK(cgf_limit(kP, {0, 0, 0, -1}).value() == Catch::Approx(0.125).epsilon(1e-14));
  CHECK(cgf_limit(kP, {0.3, 0.125, 0, 0}).is_infinite());
  CHECK(cgf_limit(kP, {0, 0, 0.5, 0}).is_infinite());
  CHECK(cgf_limit(kP, {0, 0.2, 0, 0}).is_infinite());
  CHECK(in_cgf_domain(kP, {5, 0.1, 0.4, -5}));
  CHECK_FALSE(in_cgf_domain(kP, {0, 0.125, 0, 0}));
}

TEST_CASE("gradient at the origin") {
  const auto g = cgf_gradient(kP, {0, 0, 0, 0});
  CHECK(g[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(g[1] == Catch::Approx(4.0));
  CHECK(g[2] == Catch::Approx(0.5));
  CHECK(g[3] == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("gradient refuses boundary and switching points") {
  CHECK_THROWS_AS(cgf_gradient(kP, {0, 0.125, 0, 0}), BoundaryError);
  CHECK_THROWS_AS(cgf_gradient(kP, {0, 0, 0.5, 0}), BoundaryError);
  // lambda^2/(d-b) = gamma^2/phi at mu = nu = 0: d - b = 2, phi = 8.
  CHECK_THROWS_AS(cgf_gradient(kP, {1.0, 0, 0, -2.0}), BoundaryError);
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 50) {
    const CgfPoint p = random_interior(rng);
    std::array<double, 4> g;
    try {
      g = cgf_gradient(kP, p);
    } catch (const BoundaryError&) {
      continue;
    }
    const double h = 1e-6;
    for (int k = 0; k < 4; ++k) {
      CgfPoint up = p, dn = p;
      double* u = k == 0 ? &up.lambda : k == 1 ? &up.mu : k == 2 ? &up.nu : &up.gamma;
      double* d = k == 0 ? &dn.lambda : k == 1 ? &dn.mu : k == 2 ? &dn.nu : &dn.gamma;
      *u += h;
      *d -= h;
      const double fd = (cgf_limit(kP, up).value() - cgf_limit(kP, dn).value()) / (2 * h);
      CHECK(fd == Catch::Approx(g[k]).epsilon(1e-6).margin(1e-7));
    }
    ++checked;
  }
}

TEST_CASE("steepness near mu = b^2/8") {
  const auto g = cgf_gradient(kP, {0, 0.125 - 1e-8, 0, 0});
  CHECK(std::hypot(g[0], g[1], g[2]) > 1e3);
}

TEST_CASE("limiting CGF is convex") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const CgfPoint p = random_interior(rng), q = random_interior(rng);
    const CgfPoint m{(p.lambda + q.lambda) / 2, (p.mu + q.mu) / 2, (p.nu + q.nu) / 2, (p.gamma + q.gamma) / 2};
    CHECK(cgf_limit(kP, m).value() <= 0.5 * (cgf_limit(kP, p).value() + cgf_limit(kP, q).value()) + 1e-12);
  }
}

TEST_CASE("limiting CGF is continuous across the switching surface") {
  for (double lam : {0.5, 1.0, 2.0}) {
    const double gamma = -2.0 * lam;
    const double a = cgf_limit(kP, {lam, 0, 0, gamma - 1e-10}).value();
    const double b = cgf_limit(kP, {lam, 0, 0, gamma + 1e-10}).value();
    CHECK(std::abs(a - b) < 1e-9);
  }
}

TEST_CASE("lambda_star objective is concave in (d, f)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double d1 = u(rng), f1 = u(rng), d2 = u(rng), f2 = u(rng);
    const double mid = lambda_star_objective(kP, 0.3, 3.0, 0.7, -0.2, (d1 + d2) / 2, (f1 + f2) / 2);
    const double avg = 0.5 * (lambda_star_objective(kP, 0.3, 3.0, 0.7, -0.2, d1, f1) +
                              lambda_star_objective(kP, 0.3, 3.0, 0.7, -0.2, d2, f2));
    CHECK(mid >= avg - 1e-12);
  }
}

TEST_CASE("lambda_star named values") {
  const auto r = lambda_star_solve(kP, 0.0, 4.0, 0.5, 0.0);
  CHECK(r.value.value() == Catch::Approx(0.0).margin(1e-12));
  CHECK(r.d == Catch::Approx(1.0).epsilon(1e-9));
  CHECK(r.f == Catch::Approx(1.0).epsilon(1e-9));
  CHECK(lambda_star(kP, 0.0, 1.0, 0.5, 0.0).is_infinite());
  CHECK(lambda_star(kP, -0.1, 4.0, 0.5, 0.0).is_infinite());
  CHECK(lambda_star(kP, 0.0, 4.0, 0.5, 0.1).is_infinite());
  const double v = lambda_star(kP, 0.0, 4.0, 0.5, -0.3).value();
  CHECK(v > 0.0);
  CHECK(v == Catch::Approx(legendre_transform_numeric(kP, 0.0, 4.0, 0.5, -0.3).value()).margin(1e-6));
}

TEST_CASE("finite-T Monte Carlo CGF") {
  const auto origin = cgf_finite_T_mc(kP, {0, 0, 0, 0}, 10.0, 100, 1);
  CHECK(origin.estimate == 0.0);
  CHECK(origin.std_error == 0.0);

  // d = 9, f = 1: limit -(9/2)(2) + 1 = -8.
  const double limit = cgf_limit(kP, {0, -10, 0, 0}).value();
  CHECK(limit == Catch::Approx(-8.0));
  CHECK(oracle::affine_cgf(kP, -10.0, 200.0) == Catch::Approx(limit).epsilon(0.01));
  CHECK(oracle::affine_cgf(kP, -0.3, 1e4) == Catch::Approx(cgf_limit(kP, {0, -0.3, 0, 0}).value()).epsilon(1e-3));

  // At long horizons the mean is carried by rare paths with small int X, so
  // plain Monte Carlo is compared with the exact finite-T value at short T.
  for (double T : {0.25, 0.5, 1.0}) {
    const auto mc = cgf_finite_T_mc(kP, {0, -10, 0, 0}, T, 4000, 2);
    INFO("T=" << T << " se=" << mc.std_error);
    CHECK(std::abs(mc.estimate - oracle::affine_cgf(kP, -10.0, T)) < 3.0 * mc.std_error + 1e-3);
  }
}
