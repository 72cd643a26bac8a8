#include <benchmark/benchmark.h>

#include "cg/graph.hpp"
#include "cg/orientation.hpp"

static void BM_ShortOrientation(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) {
    auto pair = cg::short_orientation(g);
    benchmark::DoNotOptimize(pair.second.certified_bound);
  }
}
BENCHMARK(BM_ShortOrientation)->Arg(100)->Arg(400)->Arg(1600)->Arg(6400);

static void BM_VerifyOrientation(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  auto [o, cert] = cg::short_orientation(g);
  for (auto _ : state) {
    auto report = cg::verify_orientation(g, o, cert);
    benchmark::DoNotOptimize(report.all_passed());
  }
}
BENCHMARK(BM_VerifyOrientation)->Arg(400)->Arg(1600);

static void BM_StructuredPathBound(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  auto [o, cert] = cg::short_orientation(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cg::longest_directed_path_structured(g, o, cert));
  }
}
BENCHMARK(BM_StructuredPathBound)->Arg(400)->Arg(1600);

BENCHMARK_MAIN();
