#include <cmath>
#include <random>

#include <boost/math/special_functions/bessel.hpp>

#include "catch_amalgamated.hpp"
#include "cirldp/bessel.hpp"
#include "cirldp/errors.hpp"
#include "cirldp/rng.hpp"

using cirldp::log_bessel_i;

TEST_CASE("half-integer order has a closed form") {
  const double expected = std::log(std::sqrt(2.0 / M_PI) * std::sinh(1.0));
  CHECK(log_bessel_i(0.5, 1.0) == Catch::Approx(expected).epsilon(1e-13));
  CHECK(std::exp(log_bessel_i(0.5, 1.0)) == Catch::Approx(0.937674).epsilon(1e-6));
  for (double z : {0.01, 3.0, 25.0, 150.0, 690.0}) {
    const double closed = 0.5 * std::log(2.0 / (M_PI * z)) + z + std::log1p(-std::exp(-2.0 * z)) - std::log(2.0);
    CHECK(log_bessel_i(0.5, z) == Catch::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("agrees with Boost to 1e-10 relative on the working range") {
  auto rng = cirldp::path_stream(3, 0);
  std::uniform_real_distribution<double> un(0.0, 50.0);
  std::uniform_real_distribution<double> ulz(std::log(1e-3), std::log(700.0));
  for (int i = 0; i < 2000; ++i) {
    const double nu = un(rng);
    const double z = std::exp(ulz(rng));
    const double ref = boost::math::cyl_bessel_i(nu, z);
    if (!(ref > 1e-300) || !std::isfinite(ref)) continue;
    INFO("nu=" << nu << " z=" << z);
    CHECK(std::exp(log_bessel_i(nu, z) - std::log(ref)) == Catch::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("sandwich bound holds at random points") {
  auto rng = cirldp::path_stream(4, 0);
  std::uniform_real_distribution<double> un(0.0, 50.0);
  std::uniform_real_distribution<double> uz(1e-6, 700.0);
  for (int i = 0; i < 10000; ++i) {
    const double nu = un(rng);
    const double z = uz(rng);
    const double scaled = nu * std::log(2.0 / z) + std::lgamma(nu + 1.0) + log_bessel_i(nu, z);
    REQUIRE(scaled > 0.0);
    REQUIRE(scaled < z);
  }
}

TEST_CASE("small argument limit of the scaled function is one") {
  for (double nu : {0.0, 1.0, 7.5}) {
    const double z = 1e-8;
    const double scaled = nu * std::log(2.0 / z) + std::lgamma(nu + 1.0) + log_bessel_i(nu, z);
    CHECK(scaled == Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("large arguments do not overflow") {
  CHECK(std::isfinite(log_bessel_i(1.0, 1e6)));
  CHECK(log_bessel_i(1.0, 1e6) == Catch::Approx(1e6 - 0.5 * std::log(2.0 * M_PI * 1e6)).epsilon(1e-12));
}

TEST_CASE("rejects nonpositive arguments") {
  CHECK_THROWS_AS(log_bessel_i(1.0, 0.0), cirldp::DomainError);
  CHECK_THROWS_AS(log_bessel_i(1.0, -2.0), cirldp::DomainError);
}
