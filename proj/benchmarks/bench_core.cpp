#include <benchmark/benchmark.h>

#include <vector>

#include "lclc/lclc.hpp"

using namespace lclc;

static void BM_PowerSum(benchmark::State& state) {
  const auto x = materialize(ParametricLaw::geometric(1.0 - 1.0 / static_cast<double>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(power_sum(x, 2.5));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(x.size()));
}
BENCHMARK(BM_PowerSum)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_Difference(benchmark::State& state) {
  const auto x = LatticePMF::normalize(std::vector<double>(static_cast<std::size_t>(state.range(0)), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(difference(x, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Difference)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

static void BM_MatchGeometric(benchmark::State& state) {
  const auto x = LatticePMF::normalize({0.4, 0.3, 0.2, 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(match_geometric(x, 2.0));
}
BENCHMARK(BM_MatchGeometric);

static void BM_CheckConcavity(benchmark::State& state) {
  const auto x = materialize(ParametricLaw::geometric(0.7));
  for (auto _ : state) benchmark::DoNotOptimize(check_concavity(x));
}
BENCHMARK(BM_CheckConcavity);

static void BM_SupVarentropy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sup_varentropy_symmetric());
}
BENCHMARK(BM_SupVarentropy);

static void BM_KConstant(benchmark::State& state) {
  const auto x = materialize(ParametricLaw::geometric(0.8));
  const auto grid = default_alpha_grid();
  for (auto _ : state) benchmark::DoNotOptimize(K_constant(x, grid));
}
BENCHMARK(BM_KConstant);

BENCHMARK_MAIN();
