#include <benchmark/benchmark.h>

#include "btzotto/optimizer.hpp"
#include "btzotto/specfun.hpp"

using namespace btzotto;

static void BM_ConicalP(benchmark::State& state) {
  const double xi = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::conical_p({xi, 7.0}));
  }
}
BENCHMARK(BM_ConicalP)->Arg(0)->Arg(5)->Arg(50);

static void BM_ConicalPLargeArgument(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::conical_p_alpha(1.5, 60.0));
  }
}
BENCHMARK(BM_ConicalPLargeArgument);

static void BM_TransitionRate(benchmark::State& state) {
  const BathSpec bath{static_cast<double>(state.range(0)) / 100.0, 0.01,
                      static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_rate(0.1, bath));
  }
}
BENCHMARK(BM_TransitionRate)
    ->Args({5, 0})
    ->Args({10, -1})
    ->Args({200, 1})
    ->Unit(benchmark::kMicrosecond);

static void BM_RunCycle(benchmark::State& state) {
  CycleConfig c;
  c.hot.zeta = c.cold.zeta = -1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_cycle(c));
  }
}
BENCHMARK(BM_RunCycle)->Unit(benchmark::kMicrosecond);

static void BM_RunCycleCachedRates(benchmark::State& state) {
  CycleConfig c;
  const CycleRates rates = cycle_rates(c);
  for (auto _ : state) {
    c.tau_h += 1e-9;
    benchmark::DoNotOptimize(run_cycle(c, rates));
  }
}
BENCHMARK(BM_RunCycleCachedRates);

static void BM_OptimizeEngine(benchmark::State& state) {
  CycleConfig c;
  c.omega_c = 0.1;
  c.hot = {2.0, 0.01, -1};
  c.cold = {1.0, 0.01, -1};
  c.tau_h = 0.2;
  c.tau_c = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_engine(c));
  }
}
BENCHMARK(BM_OptimizeEngine)->Unit(benchmark::kMillisecond);

static void BM_OptimizeFridge(benchmark::State& state) {
  CycleConfig c;
  c.omega_h = 0.5;
  c.hot = {2.0, 0.01, -1};
  c.cold = {1.0, 0.01, -1};
  c.tau_h = 0.2;
  c.tau_c = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_fridge(c));
  }
}
BENCHMARK(BM_OptimizeFridge)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
