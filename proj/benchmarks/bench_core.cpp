#include <benchmark/benchmark.h>

#include "schreier/graph.hpp"
#include "schreier/schreier.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

static void BM_SrBruteforce(benchmark::State& state) {
  const Count n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sr_bruteforce({n, 3, 2}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SrBruteforce)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_SrPartialSum(benchmark::State& state) {
  const Count n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sr_partial_sum({n, 3, 2}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SrPartialSum)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_BuildT(benchmark::State& state) {
  const Count n = state.range(0);
  for (auto _ : state) {
    GraphBuilder builder(Family::kT, 7, 2, ChoicePolicy::canonical());
    builder.grow_to(n);
    benchmark::DoNotOptimize(builder.edge_count());
  }
}
BENCHMARK(BM_BuildT)->RangeMultiplier(2)->Range(16, 512);

static void BM_Sweep(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep({60, 5, 5}, threads));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
