#include <benchmark/benchmark.h>

#include "condcop/estimation.hpp"
#include "condcop/metrics.hpp"
#include "condcop/registry.hpp"
#include "condcop/sampling.hpp"

using namespace condcop;

static void BM_D1Galambos(benchmark::State& state) {
  const Copula c = make_copula("galambos:3");
  const Copula pi = make_pi();
  const Quadrature q{static_cast<int>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(d1(c, pi, q));
}
BENCHMARK(BM_D1Galambos)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_Sample(benchmark::State& state) {
  const Copula c = make_copula(state.range(1) ? "galambos:3" : "clayton:2");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(c, static_cast<std::size_t>(state.range(0)), RngSpec{++seed, 0}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Args({1000, 0})->Args({1000, 1})->Unit(benchmark::kMillisecond);

static void BM_Cfg(benchmark::State& state) {
  const auto p = pseudo_obs(sample(make_copula("galambos:3"), state.range(0), RngSpec{1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(convexify_pickands(cfg_estimator(p)));
}
BENCHMARK(BM_Cfg)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_Kendall(benchmark::State& state) {
  const auto p = pseudo_obs(sample(make_copula("gumbel:3"), state.range(0), RngSpec{1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_generator(empirical_kendall(p)));
}
BENCHMARK(BM_Kendall)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
