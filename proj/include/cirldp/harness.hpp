#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cirldp/batch.hpp"
#include "cirldp/functionals.hpp"
#include "cirldp/rates.hpp"

namespace cirldp {

using Mat2 = std::array<std::array<double, 2>, 2>;

/// 4 C^{-1} with C = [[-b/(a-2), 1], [1, -a/b]], the limiting covariance of
/// sqrt(T) (estimate - truth) shared by all three estimators.
struct CltCovariance {
  Mat2 C;
  Mat2 target;
};

CltCovariance clt_covariance(const ProcessParams& params);

struct CltReport {
  EstimatorKind kind;
  double T;
  std::size_t n_paths;
  std::array<double, 2> mean;  // of sqrt(T) (estimate - truth)
  Mat2 covariance;
  Mat2 target;
  std::array<double, 3> relative_deviation;  // entries (0,0), (0,1), (1,1)
  double tolerance;
  bool pass;
};

/// CLT check on precomputed path functionals (all at the same horizon).
CltReport clt_report(const ProcessParams& params, EstimatorKind kind,
                     const std::vector<PathFunctionals>& paths, double tolerance = 0.15);

/// Simulates n_paths paths of length T and runs clt_report.
CltReport clt_experiment(const ProcessParams& params, EstimatorKind kind, double T, std::size_t n_paths,
                         std::uint64_t seed, double tolerance = 0.15,
                         double steps_per_unit = kDefaultStepsPerUnitTime);

enum class SlopeFunctional { S, Sigma, V };

SlopeFunctional parse_slope_functional(const std::string& name);
std::string to_string(SlopeFunctional f);

struct SlopeReport {
  SlopeFunctional functional;
  double c;
  bool upper_tail;  // P(functional >= c) when true, P(functional <= c) otherwise
  std::vector<double> T_grid;
  std::vector<std::size_t> hits;
  std::vector<double> probability;
  std::vector<double> slope;              // -(1/T) log P
  std::vector<double> incremental_slope;  // -(log P_k - log P_{k-1}) / (T_k - T_{k-1}); first entry NaN
  double target;
  double tolerance;
  bool pass;
};

inline constexpr std::size_t kMinTailHits = 50;

/// Tail-probability decay of one functional. `paths[k]` holds the
/// functionals at horizon T_grid[k]. Throws InconclusiveError when the
/// largest horizon has fewer than n_min hits.
SlopeReport slope_report(const ProcessParams& params, SlopeFunctional functional, double c,
                         const std::vector<double>& T_grid,
                         const std::vector<std::vector<PathFunctionals>>& paths, double tolerance = 0.3,
                         std::size_t n_min = kMinTailHits);

SlopeReport slope_experiment(const ProcessParams& params, SlopeFunctional functional, double c,
                             const std::vector<double>& T_grid, std::size_t n_paths, std::uint64_t seed,
                             double tolerance = 0.3, double steps_per_unit = kDefaultStepsPerUnitTime);

/// Median over paths of the distance between the combined and MLE estimates, per horizon.
std::vector<double> equivalence_medians(const ProcessParams& params, const std::vector<double>& T_grid,
                                        std::size_t n_paths, std::uint64_t seed,
                                        double steps_per_unit = kDefaultStepsPerUnitTime);

struct GridRow {
  double alpha;
  double beta;
  ExtReal J;
  ExtReal K;
  ExtReal I;
};

/// Rate surfaces on an n_alpha x n_beta grid spanning the closed ranges.
std::vector<GridRow> surface_grid(const ProcessParams& params, std::array<double, 2> alpha_range,
                                  std::array<double, 2> beta_range, std::size_t n_alpha, std::size_t n_beta);

/// Header `alpha,beta,J,K,I`; +inf written as `inf`.
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

struct ProfileRow {
  double v;
  ExtReal J;
  ExtReal K;
  ExtReal I;
};

/// (Ja, Ka, Ia) along alpha values or (Jb, Kb, Ib) along beta values.
std::vector<ProfileRow> profile_curves(const ProcessParams& params, bool dimensional,
                                       const std::vector<double>& grid);

/// Header `alpha,Ja,Ka,Ia` or `beta,Jb,Kb,Ib`.
void write_profile_csv(std::ostream& out, bool dimensional, const std::vector<ProfileRow>& rows);

/// Evenly spaced n points over [lo, hi] (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

nlohmann::json params_json(const ProcessParams& params);
nlohmann::json to_json(const CltReport& r);
nlohmann::json to_json(const SlopeReport& r);

/// {experiment, params, settings, metrics, pass}
nlohmann::json make_report(const std::string& experiment, const ProcessParams& params,
                           nlohmann::json settings, nlohmann::json metrics, bool pass);

}  // namespace cirldp
