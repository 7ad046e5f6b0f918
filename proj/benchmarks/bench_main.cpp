#include <benchmark/benchmark.h>

#include <random>

#include "avd/classify.hpp"
#include "avd/edge.hpp"
#include "avd/oracle.hpp"

namespace {

using namespace avd;

const CanonicalConfig kNode = CanonicalConfig::make(2.0, 4.0 / 3.0, 5.0 / 3.0, -0.8, 0.6);

void BM_BuildEdge(benchmark::State& state) {
  const Segment s1{{0.3, -1.2}, {2.5, 0.4}};
  const Segment s2{{-1.0, 2.0}, {0.5, 3.5}};
  for (auto _ : state) benchmark::DoNotOptimize(build_edge(canonicalize(s1, s2)));
}
BENCHMARK(BM_BuildEdge);

void BM_Evaluate(benchmark::State& state) {
  const BivariatePoly f = edge_polynomial(kNode);
  Point p{0.1, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(f, p));
    p.x += 1e-9;
  }
}
BENCHMARK(BM_Evaluate);

void BM_FindSingularities(benchmark::State& state) {
  const BivariatePoly f = edge_polynomial(kNode);
  ClassifyOptions opts;
  opts.seed_grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_singularities(f, edge_search_box(kNode), opts));
}
BENCHMARK(BM_FindSingularities)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ClassifyEdge(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<EdgeCurve> curves;
  for (int i = 0; i < 16; ++i) {
    curves.push_back(build_edge(CanonicalConfig::from_angle(u(rng), u(rng), 1.0 + 0.2 * u(rng), u(rng))));
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_edge(curves[k++ % curves.size()]));
}
BENCHMARK(BM_ClassifyEdge)->Unit(benchmark::kMillisecond);

void BM_ExtractBisector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{-4, 4, -4, 4, n, n};
  const Segment s1 = CanonicalConfig::canonical_s1();
  const Segment s2 = kNode.canonical_s2();
  for (auto _ : state) benchmark::DoNotOptimize(extract_bisector(s1, s2, grid));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ExtractBisector)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_RasterizeDiagram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Segment> sites{{{-1, 0}, {1, 0}}, {{2, 1}, {3, 3}}, {{-2, 2}, {-1, 4}}};
  const GridSpec grid{-6, 7, -4, 8, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(rasterize_diagram(sites, grid));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RasterizeDiagram)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
