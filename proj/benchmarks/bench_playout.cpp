#include <benchmark/benchmark.h>

#include "cg/game.hpp"
#include "cg/graph.hpp"
#include "cg/orientation.hpp"
#include "cg/strategy.hpp"
#include "cg/transcript.hpp"

static void BM_TreeVsReactive(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) {
    cg::GameConfig cfg;
    cfg.b = 1;
    cg::GameState st(g, cfg);
    auto maker = cg::maker_tree_strategy(0);
    auto breaker = cg::breaker_reactive_greedy();
    benchmark::DoNotOptimize(cg::play(st, *maker, *breaker).max_component);
  }
}
BENCHMARK(BM_TreeVsReactive)->Arg(500)->Arg(2000)->Arg(8000);

static void BM_TreeVsGlobal(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 4, 1);
  auto [o, cert] = cg::short_orientation(g);
  benchmark::DoNotOptimize(cert.certified_bound);
  for (auto _ : state) {
    cg::GameConfig cfg;
    cfg.b = 2;
    cg::GameState st(g, cfg, o);
    auto maker = cg::maker_tree_strategy(0);
    auto breaker = cg::breaker_global(o);
    benchmark::DoNotOptimize(cg::play(st, *maker, *breaker).max_component);
  }
}
BENCHMARK(BM_TreeVsGlobal)->Arg(500)->Arg(2000)->Arg(8000);

static void BM_GreedyVsCounterTree(benchmark::State& state) {
  cg::Graph g = cg::random_regular(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) {
    cg::GameConfig cfg;
    cg::GameState st(g, cfg);
    auto maker = cg::maker_tree_strategy(0);
    auto breaker = cg::breaker_counter_tree();
    benchmark::DoNotOptimize(cg::play(st, *maker, *breaker).rounds);
  }
}
BENCHMARK(BM_GreedyVsCounterTree)->Arg(500)->Arg(2000);
