#include <benchmark/benchmark.h>

#include "toricmld/fan.hpp"

using namespace toricmld;

static void BM_ResolveAn(benchmark::State& state) {
  long r = state.range(0);
  Fan f = Fan::make(2, {{{1, 0}, {1, r}}});
  for (auto _ : state) benchmark::DoNotOptimize(resolve(f));
}
BENCHMARK(BM_ResolveAn)->RangeMultiplier(2)->Range(2, 64);

static void BM_ResolveQuotient(benchmark::State& state) {
  long r = state.range(0);
  Fan f = Fan::make(3, {{{1, 0, 0}, {0, 1, 0}, {-1, -1, r}}});
  for (auto _ : state) benchmark::DoNotOptimize(resolve(f));
}
BENCHMARK(BM_ResolveQuotient)->DenseRange(2, 7);

static void BM_ProductA1Power(benchmark::State& state) {
  Fan a1 = Fan::make(2, {{{1, 0}, {1, 2}}});
  for (auto _ : state) {
    Fan f = a1;
    for (long i = 1; i < state.range(0); ++i) f = product(f, a1);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_ProductA1Power)->DenseRange(1, 4);

BENCHMARK_MAIN();
