#include "lcdecomp/monomial_engine.hpp"

#include <benchmark/benchmark.h>

using namespace lcdecomp;

static MonomialIdeal staircase(int k) {
  std::vector<Exponent> gens;
  for (int a = 0; a <= k; ++a) gens.push_back({a, k - a, 1});
  gens.push_back({0, 0, 3});
  return MonomialIdeal(3, gens);
}

static void BM_ExtTable(benchmark::State& state) {
  const GradedModule M = GradedModule::quotient(staircase(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ext_table(M));
}
BENCHMARK(BM_ExtTable)->DenseRange(1, 6);

static void BM_CechTable(benchmark::State& state) {
  const GradedModule M = GradedModule::quotient(staircase(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(local_coh_cech(M));
}
BENCHMARK(BM_CechTable)->DenseRange(1, 6);

static void BM_Filtration(benchmark::State& state) {
  const GradedModule M = GradedModule::quotient(staircase(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dimension_filtration(M));
}
BENCHMARK(BM_Filtration)->DenseRange(1, 6);

BENCHMARK_MAIN();
