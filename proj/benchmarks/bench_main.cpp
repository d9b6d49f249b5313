#include "linknav/linknav.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace linknav;

namespace {

// Equilateral-ish linkage (1, ..., 1, 1 + 1/2) with n edges: odd total, generic.
Linkage near_equilateral(int n) {
  std::vector<long long> l(static_cast<std::size_t>(n), 2);
  l[0] = 3;
  return Linkage::from_integers(l);
}

void BM_EnumerateVertices(benchmark::State& state) {
  Linkage L = near_equilateral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(L, 0));
}
BENCHMARK(BM_EnumerateVertices)->DenseRange(5, 11, 2);

void BM_CountCells(benchmark::State& state) {
  Linkage L = near_equilateral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cell_census(L));
}
BENCHMARK(BM_CountCells)->DenseRange(5, 13, 2);

void BM_BuildGraph(benchmark::State& state) {
  Linkage L = near_equilateral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(L));
}
BENCHMARK(BM_BuildGraph)->DenseRange(5, 9, 2);

void BM_Plan(benchmark::State& state) {
  Linkage L = near_equilateral(static_cast<int>(state.range(0)));
  const auto verts = enumerate_cells(L, 0);
  std::mt19937_64 rng(1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(256);
  for (auto& p : pairs) p = {rng() % verts.size(), rng() % verts.size()};
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(plan(L, verts[a], verts[b]));
  }
}
BENCHMARK(BM_Plan)->DenseRange(5, 11, 2);

void BM_PlanLargeN(benchmark::State& state) {
  // No enumeration: endpoints built directly as interval labels.
  const int n = static_cast<int>(state.range(0));
  Linkage L = near_equilateral(n);
  const int third = n / 3;
  auto run = [](int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet::of(v);
  };
  const Vertex v{run(1, third), run(third + 1, 2 * third), run(2 * third + 1, n)};
  const Vertex w = mirror(v);
  for (auto _ : state) benchmark::DoNotOptimize(plan(L, v, w));
}
BENCHMARK(BM_PlanLargeN)->RangeMultiplier(2)->Range(8, 64);

void BM_EdgeFlex(benchmark::State& state) {
  Linkage L = Linkage::from_integers({10, 1, 9, 4, 9, 2, 4});
  const EdgeLabel e{{3, 6}, {1, 4}, {7}, {2, 5}};
  FlexOptions opts;
  opts.samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_flex(L, e, opts));
}
BENCHMARK(BM_EdgeFlex)->Arg(16)->Arg(64)->Arg(256);

void BM_SynthesizeMotion(benchmark::State& state) {
  Linkage L = Linkage::from_integers({10, 1, 9, 4, 9, 2, 4});
  const Configuration s = realize_vertex(L, Vertex{{3, 6}, {1, 4, 7}, {2, 5}});
  const Configuration t = realize_vertex(L, Vertex{{5, 6, 7}, {1, 2}, {3, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_motion(L, s, t));
}
BENCHMARK(BM_SynthesizeMotion);

}  // namespace
BENCHMARK_MAIN();
