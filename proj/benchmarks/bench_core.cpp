#include <benchmark/benchmark.h>

#include <random>

#include "extrema/diophantine.hpp"
#include "extrema/lfunc.hpp"
#include "extrema/resonator.hpp"

using namespace extrema;

static void BM_SmoothedZeta(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const auto window = SmoothingWindow::for_scale(t * t);
  const auto zeta = LFunctionSpec::zeta();
  for (auto _ : state) benchmark::DoNotOptimize(smoothed_value(zeta, 0.75, t, window));
}
BENCHMARK(BM_SmoothedZeta)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ReferenceZeta(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference_zeta(0.75, t));
}
BENCHMARK(BM_ReferenceZeta)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMicrosecond);

static void BM_Expand(benchmark::State& state) {
  const auto zeta = LFunctionSpec::zeta();
  const auto N = static_cast<std::uint64_t>(state.range(0));
  const WeightRecipe recipe = plan_weights(zeta, 0.75, N);
  for (auto _ : state) benchmark::DoNotOptimize(expand(zeta, recipe, N, 1'000'000).terms().size());
}
BENCHMARK(BM_Expand)->Arg(10000)->Arg(1000000)->Arg(100000000)->Unit(benchmark::kMillisecond);

static void BM_PowerGrid(benchmark::State& state) {
  const auto zeta = LFunctionSpec::zeta();
  const ResonatorPlan plan = expand(zeta, plan_weights(zeta, 0.75, 100'000), 100'000, 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(resonator_power_grid(plan, 1e6, 0.27, 65536));
  state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_PowerGrid)->Unit(benchmark::kMillisecond);

static void BM_SearchT(benchmark::State& state) {
  const auto inst = ChenInstance::from_primes({2, 3, 5, 7}, {0.1, 0.7, 0.4, 0.9}, {1.0, 0.5, 0.3, 0.8}, 3, 0.0,
                                              static_cast<double>(state.range(0)));
  const double step = 1.0 / (4.0 * inst.max_lambda());
  for (auto _ : state) benchmark::DoNotOptimize(search_t(inst, step, 40).value);
}
BENCHMARK(BM_SearchT)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_LambdaExact(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_exact({2, 3, 5, 7}, M).lambda);
}
BENCHMARK(BM_LambdaExact)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
