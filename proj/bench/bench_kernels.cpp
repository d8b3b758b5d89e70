// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "cirldp/batch.hpp"
#include "cirldp/harness.hpp"
#include "cirldp/rates.hpp"

using namespace cirldp;

namespace {

const ProcessParams kP{4.0, -1.0, 1.0};

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_SimulateFunctionals(benchmark::State& state) {
  const PathBatch batch{kP, kDefaultStepsPerUnitTime, 1, 256};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_functionals(batch, {10.0}, mode(state)));
  state.SetItemsProcessed(state.iterations() * 256 * 2000);
}

void BM_RateGrid(benchmark::State& state) {
  const auto alphas = linspace(3.0, 5.0, 101);
  const auto betas = linspace(-4.0, -0.5, 101);
  for (auto _ : state) {
    benchmark::DoNotOptimize(map_indices(
        alphas.size() * betas.size(),
        [&](std::size_t k) { return rate_I_mle(kP, alphas[k / betas.size()], betas[k % betas.size()]).value(); },
        mode(state)));
  }
}

void BM_KbProfile(benchmark::State& state) {
  const auto betas = linspace(-4.0, 2.0, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        map_indices(betas.size(), [&](std::size_t k) { return rate_marginal(kP, Marginal::Kb, betas[k]).value(); },
                    mode(state)));
  }
}

}  // namespace

BENCHMARK(BM_SimulateFunctionals)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RateGrid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KbProfile)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
