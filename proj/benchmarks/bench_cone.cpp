#include "lcdecomp/cone_decomp.hpp"
#include "lcdecomp/monomial_engine.hpp"
#include "lcdecomp/sacm.hpp"

#include <benchmark/benchmark.h>

using namespace lcdecomp;

static void BM_GreedyTable1(benchmark::State& state) {
  const Table b = graded_betti(GradedModule::quotient(MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}})));
  for (auto _ : state) benchmark::DoNotOptimize(bs_greedy(b));
}
BENCHMARK(BM_GreedyTable1);

static void BM_ReduceToP(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const DegreeSequence d({0, w, 2 * w, 3 * w}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_P(d));
}
BENCHMARK(BM_ReduceToP)->DenseRange(2, 5);

static void BM_VertexWindowLP(benchmark::State& state) {
  const GeneratorRef a3{Family::A3, {0, 3, 2}, 3};
  const Table T = generator_table(a3);
  const auto gens = enumerate_generators(-static_cast<int>(state.range(0)), 3 + static_cast<int>(state.range(0)), 3,
                                         {Family::A1, Family::A2, Family::A4});
  for (auto _ : state) benchmark::DoNotOptimize(cone_membership_lp(T, gens));
}
BENCHMARK(BM_VertexWindowLP)->DenseRange(0, 3);

static void BM_DecomposeSaCM(benchmark::State& state) {
  const GradedModule M = GradedModule::quotient(MonomialIdeal(3, {{1, 1, 0}, {1, 0, 1}, {3, 0, 0}}));
  const auto f = factor_list(dimension_filtration(M));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_sacm(f, 3));
}
BENCHMARK(BM_DecomposeSaCM);

BENCHMARK_MAIN();
