#include <benchmark/benchmark.h>

#include "ccsub/common_index.hpp"
#include "ccsub/detect.hpp"
#include "ccsub/enumerate.hpp"
#include "ccsub/generators.hpp"

namespace {

using namespace ccsub;

Graph gnp(benchmark::State& state, double p) {
  return gen_gnp(static_cast<std::size_t>(state.range(0)), p, 11);
}

auto ignore = [](const Occurrence&) { return Visit::kContinue; };

void BM_Closure(benchmark::State& state) {
  const Graph g = gnp(state, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_closure(g).c);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Closure)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_CommonIndex(benchmark::State& state) {
  const Graph g = gnp(state, 0.1);
  for (auto _ : state) {
    const CommonNeighborIndex index = build_index(g);
    benchmark::DoNotOptimize(index.num_entries());
  }
}
BENCHMARK(BM_CommonIndex)->RangeMultiplier(2)->Range(64, 1024);

void BM_SquaresFast(benchmark::State& state) {
  const Graph g = gnp(state, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_squares_fast(g, ignore));
}
BENCHMARK(BM_SquaresFast)->RangeMultiplier(2)->Range(64, 512);

void BM_SquaresAnchor(benchmark::State& state) {
  const Graph g = gnp(state, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_by_anchor(g, Pattern::kSquare, ignore));
  }
}
BENCHMARK(BM_SquaresAnchor)->RangeMultiplier(2)->Range(64, 256);

void BM_TriangleDense(benchmark::State& state) {
  const Graph g = gen_family(family::CompleteBipartite{
      static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(detect_triangle_dense(g).found());
}
BENCHMARK(BM_TriangleDense)->RangeMultiplier(2)->Range(16, 256);

void BM_TriangleSparse(benchmark::State& state) {
  const Graph g = gen_family(family::CompleteBipartite{
      static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(detect_triangle_sparse(g).found());
}
BENCHMARK(BM_TriangleSparse)->RangeMultiplier(2)->Range(16, 128);

void BM_DiamondBaseline(benchmark::State& state) {
  const Graph g = gnp(state, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(detect_diamond_baseline(g).found());
}
BENCHMARK(BM_DiamondBaseline)->RangeMultiplier(2)->Range(64, 1024);

void BM_CoDiamond(benchmark::State& state) {
  const Graph g = gnp(state, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(detect_co_diamond(g).found());
}
BENCHMARK(BM_CoDiamond)->RangeMultiplier(2)->Range(64, 512);

}  // namespace

BENCHMARK_MAIN();
