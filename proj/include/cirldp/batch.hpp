#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cirldp/cir_model.hpp"
#include "cirldp/functionals.hpp"

namespace cirldp {

/// Serial loops are the reference implementation; the OpenMP versions must
/// reproduce them bit for bit.
enum class Execution { serial, parallel };

/// Worker count for parallel kernels: CIR_LDP_THREADS if set, else the OpenMP default.
int worker_count();

/// A batch of independent paths. Path i draws from path_stream(seed, i).
struct PathBatch {
  ProcessParams params;
  double steps_per_unit = kDefaultStepsPerUnitTime;
  std::uint64_t seed = 0;
  std::size_t n_paths = 0;
};

/// Simulates every path up to the largest checkpoint and records the
/// functionals at each checkpoint. Result is indexed [checkpoint][path].
/// Checkpoints are rounded to the grid of step 1/steps_per_unit.
std::vector<std::vector<PathFunctionals>> simulate_functionals(const PathBatch& batch,
                                                               const std::vector<double>& checkpoints,
                                                               Execution exec = Execution::parallel);

/// Full trajectories for a batch (for CSV output and small experiments).
std::vector<Trajectory> simulate_trajectories(const PathBatch& batch, double T,
                                              Execution exec = Execution::parallel);

/// Evaluates f at every index in [0, n) and stores the results in order.
std::vector<double> map_indices(std::size_t n, const std::function<double(std::size_t)>& f,
                                Execution exec = Execution::parallel);

}  // namespace cirldp
