#include <benchmark/benchmark.h>

#include "qkzlab/classical.hpp"
#include "qkzlab/fusion.hpp"
#include "qkzlab/qkz.hpp"
#include "qkzlab/rmatrix.hpp"

using namespace qkzlab;

static void BM_YbeBare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ybe_check(RMode::bare(), Rat(5), Rat(3), Rat(1)));
}
BENCHMARK(BM_YbeBare);

static void BM_YbeNormalized(benchmark::State& state) {
  const RMode mode = RMode::normalized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ybe_check(mode, Rat(5), Rat(3), Rat(1)));
}
BENCHMARK(BM_YbeNormalized)->DenseRange(2, 6, 2);

static void BM_NormalizedR(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normalized_r(Spectral(Rat(7, 3)), order));
}
BENCHMARK(BM_NormalizedR)->DenseRange(2, 8, 2);

static void BM_CrossingNormalized(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crossing_check(order, Rat(3)));
}
BENCHMARK(BM_CrossingNormalized)->DenseRange(1, 6);

// Bare flatness over all ordered pairs of n points.
static void BM_FlatnessBare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Spectral> pts;
  for (int k = 0; k < n; ++k) pts.emplace_back(Rat(7 * k * k + 1, 3));
  const QkzSystem sys(pts, Rat(1), RMode::bare(), Rat(1, 2));
  for (auto _ : state) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) benchmark::DoNotOptimize(flatness_check(sys, i, j));
      }
    }
  }
}
BENCHMARK(BM_FlatnessBare)->DenseRange(2, 5);

static void BM_FlatnessNormalized(benchmark::State& state) {
  const QkzSystem sys({Rat(0), Rat(3), Rat(-5, 2)}, Rat(1, 3), RMode::normalized(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(flatness_check(sys, 1, 3));
}
BENCHMARK(BM_FlatnessNormalized)->DenseRange(2, 4);

static void BM_FusionCrosscheck(benchmark::State& state) {
  const QkzSystem sys({Rat(0), Rat(7), Rat(17)}, Rat(1), RMode::bare(), Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_crosscheck(sys, 2));
}
BENCHMARK(BM_FusionCrosscheck);

static void BM_ExpandAll(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_all(cutoff));
}
BENCHMARK(BM_ExpandAll)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  const BracketTable table = expand_all(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(table));
}
BENCHMARK(BM_Jacobi)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
