#include "lcdecomp/monomial_engine.hpp"

#include <benchmark/benchmark.h>

using namespace lcdecomp;

static void BM_BettiMaxPower(benchmark::State& state) {
  const GradedModule M = GradedModule::quotient(MonomialIdeal::max_power(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(M));
}
BENCHMARK(BM_BettiMaxPower)->DenseRange(1, 4);

static void BM_HilbertMaxPower(benchmark::State& state) {
  const MonomialIdeal I = MonomialIdeal::max_power(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(I));
}
BENCHMARK(BM_HilbertMaxPower)->DenseRange(1, 6);

static void BM_PrimaryDecomposition(benchmark::State& state) {
  const MonomialIdeal I(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(primary_decomposition(I));
}
BENCHMARK(BM_PrimaryDecomposition);

BENCHMARK_MAIN();
