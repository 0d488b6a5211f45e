#include <benchmark/benchmark.h>

#include "toricmld/cone.hpp"

using namespace toricmld;

// Simplicial cone of index r: box points are the r multiples of (1,1,1)/r mod the rays.
static void BM_BoxPoints(benchmark::State& state) {
  long r = state.range(0);
  std::vector<LatticeVector> rays{{1, 0, 0}, {0, 1, 0}, {-1, -1, r}};
  Cone c = Cone::make(3, rays);
  for (auto _ : state) benchmark::DoNotOptimize(box_points(c));
  state.SetComplexityN(r);
}
BENCHMARK(BM_BoxPoints)->RangeMultiplier(4)->Range(2, 512)->Complexity();

static void BM_ConeMake(benchmark::State& state) {
  std::vector<LatticeVector> rays{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 2}, {1, 0, 1, 3}, {0, 1, 1, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(Cone::make(4, rays));
}
BENCHMARK(BM_ConeMake);

static void BM_Triangulate(benchmark::State& state) {
  std::vector<LatticeVector> rays{{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, 1, 1}, {-1, 1, 1}};
  Cone c = Cone::make(3, rays);
  for (auto _ : state) benchmark::DoNotOptimize(triangulate(c));
}
BENCHMARK(BM_Triangulate);

BENCHMARK_MAIN();
