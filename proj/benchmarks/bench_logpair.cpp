#include <benchmark/benchmark.h>

#include "toricmld/logpair.hpp"
#include "toricmld/verify.hpp"

using namespace toricmld;

static std::vector<verify::GeneratedPair> corpus(std::size_t rank) {
  verify::GenConfig cfg;
  cfg.rank = rank;
  cfg.count = 8;
  cfg.max_rays = rank + 4;
  cfg.seed = 99;
  return verify::gen_pairs(cfg);
}

static void BM_Report(benchmark::State& state) {
  auto pairs = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& g : pairs) benchmark::DoNotOptimize(report(g.pair));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pairs.size()));
}
BENCHMARK(BM_Report)->DenseRange(2, 4);

static void BM_MldOrbitQuotient(benchmark::State& state) {
  long r = state.range(0);
  Fan f = Fan::make(3, {{{1, 0, 0}, {0, 1, 0}, {-1, 1 - r, r}}});
  ToricLogPair p = ToricLogPair::make(f, std::vector<Rational>(3, Rational(0)));
  std::size_t top = f.cones().size() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(mld_orbit(p, top));
}
BENCHMARK(BM_MldOrbitQuotient)->RangeMultiplier(4)->Range(2, 512);

static void BM_GenPairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus(3));
}
BENCHMARK(BM_GenPairs);

BENCHMARK_MAIN();
