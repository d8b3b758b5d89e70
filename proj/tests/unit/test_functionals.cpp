#include <cmath>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "cirldp/batch.hpp"
#include "cirldp/errors.hpp"
#include "cirldp/functionals.hpp"

using namespace cirldp;

namespace {

PathFunctionals symbolic(double S, double Sigma, double L, double xT_over_T) {
  PathFunctionals pf;
  pf.T = 100.0;
  pf.S = S;
  pf.Sigma = Sigma;
  pf.L = L;
  pf.xT_over_T = xT_over_T;
  pf.xT = xT_over_T * pf.T;
  pf.V = S * Sigma - 1.0;
  return pf;
}

Trajectory constant_path(double c, double T, std::size_t n) {
  Trajectory t;
  for (std::size_t i = 0; i <= n; ++i) {
    t.times.push_back(T * static_cast<double>(i) / static_cast<double>(n));
    t.values.push_back(c);
  }
  return t;
}

}  // namespace

TEST_CASE("constant path functionals are exact") {
  Trajectory t = constant_path(2.5, 10.0, 100);
  t.values[0] = 1.0;
  t.values[1] = 2.5;
  const auto shifted = compute_functionals(t);
  CHECK(shifted.L == Catch::Approx(std::log(2.5) / 10.0));

  const auto pf = compute_functionals(constant_path(2.5, 10.0, 100));
  CHECK(pf.S == Catch::Approx(2.5).epsilon(1e-14));
  CHECK(pf.Sigma == Catch::Approx(0.4).epsilon(1e-14));
  CHECK(pf.V == Catch::Approx(0.0).margin(1e-14));
  CHECK(pf.L == 0.0);
}

TEST_CASE("X_T = 1 gives zero log functionals") {
  Trajectory t = constant_path(3.0, 4.0, 8);
  t.values.front() = 1.0;
  t.values.back() = 1.0;
  const auto pf = compute_functionals(t);
  CHECK(pf.L == 0.0);
  CHECK(pf.curlyL == 0.0);
}

TEST_CASE("curly L takes the signed square-root form below 1") {
  const auto pf = make_functionals(4.0, 1.0, std::exp(-1.0), 4.0, 4.0);
  CHECK(pf.curlyL == Catch::Approx(-0.5));
  const auto up = make_functionals(4.0, 1.0, std::exp(2.0), 4.0, 4.0);
  CHECK(up.curlyL == Catch::Approx(0.5));
}

TEST_CASE("grid validation") {
  Trajectory t = constant_path(1.0, 1.0, 4);
  t.times[2] += 1e-3;
  CHECK_THROWS_AS(compute_functionals(t), GridError);
  Trajectory single;
  single.times = {0.0};
  single.values = {1.0};
  CHECK_THROWS_AS(compute_functionals(single), GridError);
  Trajectory shifted = constant_path(1.0, 1.0, 4);
  for (double& s : shifted.times) s += 1.0;
  CHECK_THROWS_AS(compute_functionals(shifted), GridError);
}

TEST_CASE("streaming accumulator matches the stored-path computation") {
  const ProcessParams p = validate_params(4.0, -1.0);
  auto rng = path_stream(3, 0);
  const Trajectory t = simulate_path(p, 10.0, 2000, rng);
  FunctionalAccumulator acc(t.values[0], 10.0 / 2000.0);
  for (std::size_t i = 1; i < t.values.size(); ++i) acc.push(t.values[i]);
  const auto a = acc.snapshot();
  const auto b = compute_functionals(t);
  CHECK(a.S == Catch::Approx(b.S).epsilon(1e-12));
  CHECK(a.Sigma == Catch::Approx(b.Sigma).epsilon(1e-12));
  CHECK(a.L == Catch::Approx(b.L).epsilon(1e-12));
  CHECK(a.T == Catch::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("Ito log integral") {
  auto pf = symbolic(4.0, 0.5, 0.0, 0.0);
  pf.T = 10.0;
  CHECK(ito_log_integral(pf) == Catch::Approx(10.0));
  pf.L = 0.1;
  CHECK(ito_log_integral(pf) == Catch::Approx(11.0));
}

TEST_CASE("estimators at the ergodic limits") {
  const auto pf = symbolic(4.0, 0.5, 0.0, 0.0);
  for (auto e : {estimate_mle(pf), estimate_tilde(pf), estimate_check(pf)}) {
    CHECK(e.alpha == Catch::Approx(4.0));
    CHECK(e.beta == Catch::Approx(-1.0));
  }
}

TEST_CASE("estimator identities") {
  const auto no_log = symbolic(3.7, 0.61, 0.0, 0.04);
  CHECK(estimate_tilde(no_log).alpha == estimate_mle(no_log).alpha);
  CHECK(estimate_tilde(no_log).beta == estimate_mle(no_log).beta);
  const auto no_end = symbolic(3.7, 0.61, 0.013, 0.0);
  CHECK(estimate_check(no_end).alpha == estimate_mle(no_end).alpha);
  CHECK(estimate_check(no_end).beta == estimate_mle(no_end).beta);
}

TEST_CASE("degenerate V") {
  const auto pf = symbolic(2.0, 0.5, 0.0, 0.0);
  CHECK_THROWS_AS(estimate_mle(pf), DegenerateError);
  CHECK_THROWS_AS(estimate_tilde(pf), DegenerateError);
  CHECK_THROWS_AS(estimate_check(pf), DegenerateError);
  CHECK_THROWS_AS(estimate_combined(pf), DegenerateError);
}

TEST_CASE("combined estimator selects on X_T") {
  auto pf = symbolic(3.7, 0.61, 0.013, 0.02);
  pf.xT = 2.0;
  CHECK(estimate_combined(pf).alpha == estimate_tilde(pf).alpha);
  pf.xT = 0.5;
  CHECK(estimate_combined(pf).alpha == estimate_check(pf).alpha);
  CHECK(estimate_combined(pf).beta == estimate_check(pf).beta);
}

TEST_CASE("estimator names") {
  for (auto k : {EstimatorKind::mle, EstimatorKind::tilde, EstimatorKind::check, EstimatorKind::combined})
    CHECK(parse_estimator(to_string(k)) == k);
  CHECK_THROWS_AS(parse_estimator("ols"), ConfigError);
}

TEST_CASE("V is nonnegative on simulated paths") {
  const ProcessParams p = validate_params(3.0, -0.5);
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = path_stream(4, i);
    const auto pf = compute_functionals(simulate_path(p, 5.0, 500, rng));
    CHECK(pf.V >= 0.0);
  }
}

TEST_CASE("ergodic limits and consistency at T = 200") {
  const ProcessParams p = validate_params(4.0, -1.0);
  PathBatch batch{p, 200.0, 17, 200};
  const auto pfs = simulate_functionals(batch, {200.0}, Execution::parallel).front();
  double S = 0.0, Sig = 0.0, V = 0.0, a = 0.0, a2 = 0.0, b = 0.0, b2 = 0.0;
  for (const auto& pf : pfs) {
    S += pf.S;
    Sig += pf.Sigma;
    V += pf.V;
    const auto e = estimate_mle(pf);
    a += e.alpha;
    a2 += e.alpha * e.alpha;
    b += e.beta;
    b2 += e.beta * e.beta;
  }
  const double n = static_cast<double>(pfs.size());
  CHECK(S / n == Catch::Approx(4.0).margin(0.1));
  CHECK(Sig / n == Catch::Approx(0.5).margin(0.02));
  CHECK(V / n == Catch::Approx(1.0).margin(0.1));
  const double ma = a / n, mb = b / n;
  CHECK(std::abs(ma - 4.0) < 3.0 * std::sqrt((a2 / n - ma * ma) / n) + 0.03);
  CHECK(std::abs(mb + 1.0) < 3.0 * std::sqrt((b2 / n - mb * mb) / n) + 0.01);
}

TEST_CASE("estimates CSV") {
  std::ostringstream out;
  write_estimates_csv(out, {{0, EstimatorKind::mle, {4.0, -1.0}}, {1, EstimatorKind::check, {3.5, -0.75}}});
  CHECK(out.str() == "path_id,estimator,alpha,beta\n0,mle,4,-1\n1,check,3.5,-0.75\n");
}
