#include "cirldp/batch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>

#include <omp.h>

#include "cirldp/errors.hpp"

namespace cirldp {

int worker_count() {
  if (const char* env = std::getenv("CIR_LDP_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

namespace {

// Runs body(i) for i in [0, n); exceptions from workers are rethrown once.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(cirldp_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<std::vector<PathFunctionals>> simulate_functionals(const PathBatch& batch,
                                                               const std::vector<double>& checkpoints,
                                                               Execution exec) {
  if (checkpoints.empty()) throw DomainError("simulate_functionals: no checkpoints");
  const double dt = 1.0 / batch.steps_per_unit;
  std::vector<std::size_t> marks;
  for (double T : checkpoints) {
    if (!(T > 0.0)) throw DomainError("simulate_functionals: checkpoints must be positive");
    marks.push_back(steps_for_horizon(T, batch.steps_per_unit));
  }
  const std::size_t total = *std::max_element(marks.begin(), marks.end());
  const TransitionKernel kernel = transition_kernel(batch.params, dt);

  std::vector<std::vector<PathFunctionals>> out(marks.size(),
                                                std::vector<PathFunctionals>(batch.n_paths));
  for_each_index(batch.n_paths, exec, [&](std::size_t i) {
    Philox4x32 rng = path_stream(batch.seed, i);
    FunctionalAccumulator acc(batch.params.x0, dt);
    double x = batch.params.x0;
    for (std::size_t step = 1; step <= total; ++step) {
      x = sample_transition(kernel, x, rng);
      acc.push(x);
      for (std::size_t c = 0; c < marks.size(); ++c) {
        if (marks[c] == step) out[c][i] = acc.snapshot();
      }
    }
  });
  return out;
}

std::vector<Trajectory> simulate_trajectories(const PathBatch& batch, double T, Execution exec) {
  const std::size_t n_steps = steps_for_horizon(T, batch.steps_per_unit);
  std::vector<Trajectory> out(batch.n_paths);
  for_each_index(batch.n_paths, exec, [&](std::size_t i) {
    Philox4x32 rng = path_stream(batch.seed, i);
    out[i] = simulate_path(batch.params, T, n_steps, rng);
  });
  return out;
}

std::vector<double> map_indices(std::size_t n, const std::function<double(std::size_t)>& f,
                                Execution exec) {
  std::vector<double> out(n);
  for_each_index(n, exec, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace cirldp
