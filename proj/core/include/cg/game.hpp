#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cg/graph.hpp"
#include "cg/orientation.hpp"

namespace cg {

enum class Player : char { Maker, Breaker };

Player opponent(Player p);
const char* player_name(Player p);     // "maker" / "breaker"
const char* player_display(Player p);  // "Maker" / "Breaker"
std::optional<Player> parse_player(const std::string& s);

enum class Owner : char { Free, Maker, Breaker };

// Maker claims m edges per move, Breaker claims b; whoever moves when fewer
// free edges remain just takes what is left. target_s, when set, ends the
// game as soon as some Maker component reaches that size.
struct GameConfig {
  int m = 1;
  int b = 1;
  Player first = Player::Maker;
  std::optional<int> target_s;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct StepRecord {
  int round;
  Player player;
  int edge;
};

// A directed view of one edge: tail -> head per the attached orientation.
struct ArcRef {
  int edge;
  int tail;
  int head;
};

// Snapshot of one Maker component. In oriented games parent/height mirror
// the directed tree the engine maintains; in plain games they come from a
// BFS over Maker edges rooted at the lowest-index vertex, and type is -1.
struct ComponentMeta {
  int root;
  std::vector<int> vertices;
  std::vector<int> parent;  // parent[i] pairs with vertices[i]; -1 at the root
  std::vector<int> height;  // height[i] pairs with vertices[i]
  int type;
  int free_incident;
};

// The (m:b) game on the edge set of a graph. Components of Maker's edges are
// tracked with a union-find structure; when an Orientation is attached, each
// component additionally carries a directed tree (root, parent, height): a
// Maker claim of the arc (x,y) hangs y's old component below x, re-rooting it
// at y first if y was not its root.
class GameState {
 public:
  GameState(const Graph& g, GameConfig cfg);
  GameState(const Graph& g, GameConfig cfg, const Orientation& o);

  const Graph& graph() const { return *g_; }
  const GameConfig& config() const { return cfg_; }
  bool oriented() const { return orient_ != nullptr; }
  const Orientation& orientation() const;

  bool over() const { return over_; }
  Player turn() const { return turn_; }
  int steps_left() const { return steps_left_; }
  int round() const { return round_; }
  int rounds_played() const;  // round of the last claimed edge, 0 if none
  bool maker_forfeited() const { return forfeited_; }
  Owner owner(int edge) const;
  const std::vector<Owner>& owners() const { return owner_; }
  int free_edge_count() const { return free_count_; }
  const std::vector<StepRecord>& history() const { return history_; }

  // Claims an edge for `p`. Throws std::logic_error when the game is over and
  // std::invalid_argument for out-of-turn, out-of-range, or non-free edges.
  void apply_step(Player p, int edge);
  // Ends `p`'s move early, discarding the remaining steps.
  void pass_move(Player p);
  // Maker gives up; the game ends immediately.
  void forfeit(Player p);

  int component_root(int v) const;
  int component_size(int v) const;
  const std::vector<int>& component_vertices(int v) const;
  int free_incident(int v) const;  // free edges with an endpoint in v's component
  int max_component_size() const { return max_component_; }
  ComponentMeta component_meta(int v) const;

  // Oriented-mode structure; all of these throw std::logic_error in plain mode.
  int tree_root(int v) const;
  int tree_parent(int v) const;
  int tree_height(int v) const;
  int component_type(int v) const;  // free arcs entering from outside
  std::vector<ArcRef> free_in_arcs(int v) const;
  std::vector<ArcRef> free_out_arcs(int v) const;

  // Root of the component Maker last claimed an edge in, -1 before his first
  // claim. touched_components lists every component Maker touched since the
  // last clear_touched (monitors check exactly these after Breaker's move).
  int last_touched() const;
  std::vector<int> touched_components() const;
  void clear_touched() { touched_markers_.clear(); }

  int lowest_free_edge() const;            // -1 when none
  int lowest_free_incident_edge(int v);    // -1 when the component is dead

 private:
  int find(int v) const;
  void advance_turn();
  void merge_components(int ra, int rb);
  void attach_tree(int tail, int head, int head_root);

  const Graph* g_;
  GameConfig cfg_;
  const Orientation* orient_ = nullptr;

  std::vector<Owner> owner_;
  Player turn_;
  int steps_left_;
  int round_ = 1;
  int free_count_;
  bool over_ = false;
  bool forfeited_ = false;
  std::vector<StepRecord> history_;

  mutable std::vector<int> dsu_;
  std::vector<int> size_;          // per component root
  std::vector<int> free_inc_;      // per component root
  std::vector<std::vector<int>> vlist_;  // per component root
  std::vector<std::set<int>> eset_;      // incident edges, lazily pruned
  std::vector<int> tree_root_;     // per component root (oriented)
  std::vector<int> parent_;        // per vertex (oriented)
  std::vector<int> height_;        // per vertex (oriented)
  int max_component_ = 1;
  int last_touched_ = -1;
  std::vector<int> touched_markers_;
  mutable int scan_ = 0;  // lowest_free_edge cursor; owners never revert
};

GameState new_game(const Graph& g, GameConfig cfg);
GameState new_game(const Graph& g, GameConfig cfg, const Orientation& o);

}  // namespace cg
