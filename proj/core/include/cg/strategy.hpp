#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cg/analysis.hpp"
#include "cg/game.hpp"
#include "cg/orientation.hpp"

namespace cg {

// One side of a game. choose_step is called once per step while it is the
// owner's turn; returning nullopt means Maker forfeits or Breaker ends his
// move early. Instances are stateful and must not be shared between games.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Player side() const = 0;
  virtual std::optional<int> choose_step(GameState& st) = 0;
  // True once the strategy gave up on its special-purpose plan and switched
  // to a fallback (only the counter-tree Breaker ever does).
  virtual bool deviated() const { return false; }
};

// Self-colliding paths p_v for every neighbor v of u, each starting with the
// edge (u,v); `edges` is their union P including each body-closing edge.
struct PathFamily {
  int source = -1;
  std::vector<SelfCollidingPath> paths;
  std::set<int> edges;
};

// Requires min degree >= 3. With d = min degree, |edges| stays at or below
// 2 * d * ceil_log(d-1, n).
PathFamily build_path_family(const Graph& g, int u);

// Grows one component from `root` by always claiming the lowest-index free
// edge leaving it; forfeits when the component boundary is fully claimed.
std::unique_ptr<Strategy> maker_tree_strategy(int root = 0);
// Claims a uniformly random free edge; never forfeits.
std::unique_ptr<Strategy> maker_random(std::uint64_t seed);
// Claims a free edge joining the two largest mergeable components, breaking
// ties toward the lower edge index; never forfeits.
std::unique_ptr<Strategy> maker_greedy_merge();

// Answers inside Maker's last-touched component while it is live.
std::unique_ptr<Strategy> breaker_reactive_greedy();
// Confines a tree-strategy Maker to a fixed path family; any other Maker
// behavior triggers a permanent fallback to the reactive strategy.
std::unique_ptr<Strategy> breaker_counter_tree();
// Priority play on an attached positive-out-degree orientation: free arcs
// into the touched component highest first, then arcs out of it lowest
// first, then the lowest-index free edge. Requires an oriented game.
std::unique_ptr<Strategy> breaker_global(const Orientation& o);
// Claims a uniformly random free edge; never passes.
std::unique_ptr<Strategy> breaker_random(std::uint64_t seed);

std::string orientation_hash_hex(const Orientation& o);

}  // namespace cg
