#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cg/game.hpp"
#include "cg/graph.hpp"
#include "cg/orientation.hpp"
#include "cg/strategy.hpp"
#include "cg/transcript.hpp"

namespace cg {

// One experiment playout. The single seed drives both the random regular
// graph and any seed-less randomized strategy, so a row is reproducible from
// its CSV line alone.
struct SweepRow {
  int n = 0;
  int d = 0;
  int m = 1;
  int b = 1;
  std::uint64_t seed = 0;
  std::string maker;
  std::string breaker;
  int max_component = 1;
  int rounds = 0;
  bool forfeited = false;
  double wall_time_ms = 0.0;
};

extern const char kSweepCsvHeader[];

// Header line plus one line per row; forfeited prints as 0/1.
std::string to_csv(const std::vector<SweepRow>& rows);

struct BoundReport {
  int d = 0;
  int n = 0;
  int b = 0;
  std::string bound_name;
  double bound_value = 0.0;
  double observed_value = 0.0;
  bool pass = false;
};

// Builds a strategy from its external name: "tree" / "tree[root=K]",
// "random" / "random[seed=N]", "greedy-merge" for Maker; "reactive",
// "counter-tree", "global" / "global[orient=HASH]", "random[seed=N]" for
// Breaker. A seed-less "random" takes fallback_seed; "global" needs orient.
std::unique_ptr<Strategy> strategy_from_name(const std::string& name, Player side,
                                             std::uint64_t fallback_seed,
                                             const Orientation* orient = nullptr);

// Breaker auto-selection per bias regime: the orientation-based strategy at
// the critical bias b = d-2, the reactive one elsewhere.
std::string auto_breaker_name(int d, int b);

// Generates the seed's graph and plays one game. An orientation is computed
// on demand for a global Breaker unless one is supplied (it must then match
// the graph this seed generates).
SweepRow run_row(int n, int d, int m, int b, std::uint64_t seed, const std::string& maker,
                 const std::string& breaker, Player first, const Orientation* orient = nullptr);

struct SweepConfig {
  int n = 0;
  int d = 0;
  int m = 1;
  std::vector<int> biases;
  std::vector<std::uint64_t> seeds;
  std::string maker = "tree";
  std::string breaker;  // empty: auto-select per bias
  Player first = Player::Maker;
  int jobs = 1;
};

// One row per (bias, seed); deterministic under any jobs count.
std::vector<SweepRow> bias_sweep(const SweepConfig& cfg);

struct ScaleConfig {
  int d = 4;
  std::vector<int> ns;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> makers{"tree"};
  Player first = Player::Maker;
  int jobs = 1;
};

struct ScaleResult {
  // b = d-2, global Breaker vs each maker; one bound report per game.
  std::vector<SweepRow> breaker_rows;
  std::vector<BoundReport> reports;
  // b = d-3, tree Maker vs reactive Breaker; empty when skipped (d = 3).
  std::vector<SweepRow> maker_rows;
  bool maker_track_skipped = false;
  // median of max_component/n per n, in ns order
  std::vector<std::pair<int, double>> maker_median_fraction;
};

ScaleResult scaling_experiment(const ScaleConfig& cfg);

std::vector<std::uint64_t> seed_range(std::uint64_t base, int count);

double median(std::vector<double> values);

}  // namespace cg
