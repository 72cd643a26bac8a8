#include <benchmark/benchmark.h>

#include "cg/analysis.hpp"
#include "cg/graph.hpp"

static void BM_Girth(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cg::girth(g));
  }
}
BENCHMARK(BM_Girth)->Arg(400)->Arg(1600)->Arg(6400);

static void BM_IsoperimetricProfile(benchmark::State& state) {
  cg::Graph g = cg::random_regular(12, 3, 1);
  for (auto _ : state) {
    auto prof = cg::isoperimetric_profile(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(prof.values.size());
  }
}
BENCHMARK(BM_IsoperimetricProfile)->Arg(3)->Arg(6);

static void BM_CanonicalHash(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.canonical_hash_hex());
  }
}
BENCHMARK(BM_CanonicalHash)->Arg(400)->Arg(1600);
