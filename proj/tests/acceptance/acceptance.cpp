// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cirldp/batch.hpp"
#include "cirldp/bessel.hpp"
#include "cirldp/cgf.hpp"
#include "cirldp/checks.hpp"
#include "cirldp/harness.hpp"
#include "cirldp/rates.hpp"
#include "oracles.hpp"

using namespace cirldp;

namespace {

const ProcessParams kP{4.0, -1.0, 1.0};
constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome zero_at_truth() {
  double worst = 0.0;
  for (double a : {2.5, 3.0, 4.0, 6.0})
    for (double b : {-0.5, -1.0, -2.0}) {
      const ProcessParams p{a, b, 1.0};
      for (ExtReal v : {rate_J(p, a, b), rate_K(p, a, b), rate_I_mle(p, a, b), rate_S(p, -a / b),
                        rate_Sigma(p, -b / (a - 2)), rate_V(p, 2 / (a - 2)),
                        lambda_star(p, 0.0, -a / b, -b / (a - 2), 0.0)})
        worst = std::max(worst, std::abs(v.value()));
    }
  return {worst <= 1e-12, "max |rate at truth| = " + fmt(worst)};
}

Outcome named_values() {
  const double j20 = rate_J(kP, 2.0, 0.0).value();
  const double k00 = rate_K(kP, 0.0, 0.0).value();
  const double i2 = rate_I_mle(kP, 2.0, -1.0).value();
  const double jb = rate_marginal(kP, Marginal::Jb, -1.0).value();
  const double ja = rate_marginal(kP, Marginal::Ja, 2.0).value();
  const bool ok = std::abs(j20 - 1.0) <= 1e-12 && std::abs(k00 - std::sqrt(2.0)) <= 1e-12 &&
                  std::abs(i2 - 2.25) <= 1e-12 && std::abs(jb) <= 1e-12 && std::abs(ja - 1.0) <= 1e-12;
  std::ostringstream s;
  s.precision(15);
  s << "J(2,0)=" << j20 << " K(0,0)=" << k00 << " I(2,-1)=" << i2 << " Jb(b)=" << jb << " Ja(2)=" << ja;
  return {ok, s.str()};
}

Outcome duality() {
  const auto r = duality_check(kP, 5, 20, 1e-6);
  return {r.pass, "pair max diff " + fmt(r.metrics["pair_max_abs_diff"].get<double>()) + " on 20x20, quadruplet max diff " +
                      fmt(r.metrics["quadruplet_max_abs_diff"].get<double>()) + " on 5^4"};
}

Outcome infsup() {
  const auto r = infsup_check(kP, infsup_reference_points(), 200, 11, 1e-4);
  return {r.pass, "max |infsup - min(J,K)| " + fmt(r.metrics["max_abs_diff"].get<double>()) +
                      " at 30 points, max excess " + fmt(r.metrics["max_excess_over_min"].get<double>()) + " at 200 random points"};
}

Outcome contraction_continuity() {
  const auto c = contraction_check(kP, 40, 1e-6);
  const auto k = continuity_check(kP, 1e-9);
  double contraction = 0.0, jump = 0.0;
  for (const char* key : {"Ja_max_abs_diff", "Jb_max_abs_diff", "Ka_max_abs_diff"})
    contraction = std::max(contraction, c.metrics[key].get<double>());
  for (const char* key : {"J_at_b_over_3", "K_at_alpha_a", "Ja_at_ell_a", "Ka_at_alpha_a"})
    jump = std::max(jump, k.metrics[key].get<double>());
  return {c.pass && k.pass, "contraction max diff " + fmt(contraction) + ", branch jump max " + fmt(jump)};
}

Outcome gradient() {
  const auto r = gradient_check(kP, 50, 5, 1e-6);
  return {r.pass, "max rel err " + fmt(r.metrics["max_relative_error"].get<double>()) + ", norm near boundary " +
                      fmt(r.metrics["steep_gradient_norm"].get<double>())};
}

Outcome sampler() {
  double worst_norm = 0.0;
  std::mt19937_64 cfg_rng(kSeed);
  std::uniform_real_distribution<double> ua(2.2, 8.0), ub(-3.0, -0.2), ut(0.05, 5.0), ux(0.1, 8.0);
  for (int i = 0; i < 20; ++i) {
    const ProcessParams p{ua(cfg_rng), ub(cfg_rng), 1.0};
    const double t = ut(cfg_rng), x = ux(cfg_rng);
    const double mass = oracle::density_moment(p, t, x, 0.0, oracle::truncation_point(p, t, x));
    worst_norm = std::max(worst_norm, std::abs(mass - 1.0));
  }

  auto rng = path_stream(kSeed, 0);
  std::vector<double> draws(100000);
  for (double& v : draws) v = sample_transition(kP, 1.0, 1.0, rng);
  std::sort(draws.begin(), draws.end());
  const double d = oracle::ks_statistic(oracle::cdf_at_sorted(kP, 1.0, 1.0, draws));
  const double pval = oracle::ks_pvalue(d, draws.size());

  int violations = 0;
  std::mt19937_64 brng(kSeed + 1);
  std::uniform_real_distribution<double> un(0.0, 50.0), uz(1e-6, 700.0);
  for (int i = 0; i < 10000; ++i) {
    const double nu = un(brng), z = uz(brng);
    const double scaled = nu * std::log(2.0 / z) + std::lgamma(nu + 1.0) + log_bessel_i(nu, z);
    if (!(scaled > 0.0 && scaled < z)) ++violations;
  }
  return {worst_norm <= 1e-6 && pval > 0.01 && violations == 0,
          "max |mass-1| " + fmt(worst_norm) + ", KS D=" + fmt(d) + " p=" + fmt(pval) + ", sandwich violations " +
              std::to_string(violations) + "/10000"};
}

Outcome clt() {
  const auto paths = simulate_functionals({kP, kDefaultStepsPerUnitTime, kSeed, 5000}, {100.0}).front();
  bool ok = true;
  std::string detail;
  for (auto kind : {EstimatorKind::mle, EstimatorKind::tilde, EstimatorKind::check}) {
    const auto r = clt_report(kP, kind, paths, 0.15);
    ok = ok && r.pass;
    detail += std::string(to_string(kind)) + " rel dev (" + fmt(r.relative_deviation[0]) + "," +
              fmt(r.relative_deviation[1]) + "," + fmt(r.relative_deviation[2]) + ")" + (r.pass ? " ok; " : " over 0.15; ");
  }
  return {ok, detail};
}

std::string slope_detail(const SlopeReport& r) {
  std::string s = to_string(r.functional) + " c=" + fmt(r.c) + " target " + fmt(r.target) + " slopes";
  for (double v : r.slope) s += " " + fmt(v);
  s += " (incremental";
  for (std::size_t k = 1; k < r.incremental_slope.size(); ++k) s += " " + fmt(r.incremental_slope[k]);
  return s + ")";
}

Outcome slope() {
  const std::vector<double> grid{5.0, 10.0, 20.0};
  const auto paths = simulate_functionals({kP, kDefaultStepsPerUnitTime, kSeed, 100000}, grid);
  const auto s = slope_report(kP, SlopeFunctional::S, 5.0, grid, paths, 0.3);
  const auto g = slope_report(kP, SlopeFunctional::Sigma, 1.0, grid, paths, 0.3);
  return {s.pass && g.pass, slope_detail(s) + "; " + slope_detail(g)};
}

Outcome finite_cgf() {
  const CgfPoint q{0.1, -0.1, -0.1, -0.1};
  const auto mc = cgf_finite_T_mc(kP, q, 50.0, 10000, kSeed);
  const double lim = cgf_limit(kP, q).value();
  const double gap = std::abs(mc.estimate - lim);
  return {gap <= 3.0 * mc.std_error + 0.05,
          "estimate " + fmt(mc.estimate) + " se " + fmt(mc.std_error) + " limit " + fmt(lim)};
}

Outcome equivalence() {
  const auto m = equivalence_medians(kP, {10.0, 50.0, 200.0}, 100, kSeed);
  return {m[0] > m[1] && m[1] > m[2], "medians " + fmt(m[0]) + " " + fmt(m[1]) + " " + fmt(m[2])};
}

}  // namespace

int main() {
  criterion(1, "zero at truth", zero_at_truth);
  criterion(2, "named values", named_values);
  criterion(3, "duality", duality);
  criterion(4, "inf-sup cross-check", infsup);
  criterion(5, "contraction and continuity", contraction_continuity);
  criterion(6, "gradient and steepness", gradient);
  criterion(7, "sampler", sampler);
  criterion(8, "CLT covariance", clt);
  criterion(9, "LDP slope", slope);
  criterion(10, "finite-T CGF", finite_cgf);
  criterion(11, "exponential equivalence", equivalence);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
