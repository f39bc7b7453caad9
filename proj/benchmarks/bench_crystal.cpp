#include <benchmark/benchmark.h>

#include "c2crystal/crystal.hpp"
#include "c2crystal/path.hpp"
#include "c2crystal/young_wall.hpp"

using namespace c2crystal;

static void BM_WallGraph(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto g = build_graph(WallModel{}, ground_wall(Index{0}), depth);
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_WallGraph)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_PathGraph(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto g = build_graph(PathModel{}, ground_path(Index{1}), depth);
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_PathGraph)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Isomorphism(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto walls = build_graph(WallModel{}, ground_wall(Index{2}), depth);
  const auto paths = build_graph(PathModel{}, ground_path(Index{2}), depth);
  for (auto _ : state) {
    auto r = check_root_isomorphism(walls, paths, WallModel{}, PathModel{});
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_Isomorphism)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_ShiftDecomposition(benchmark::State& state) {
  for (auto _ : state) {
    auto r = check_shift_decomposition(Index{0}, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(r.mismatches);
  }
}
BENCHMARK(BM_ShiftDecomposition)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
