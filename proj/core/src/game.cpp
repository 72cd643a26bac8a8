#include "cg/game.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cg {

Player opponent(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }

const char* player_name(Player p) { return p == Player::Maker ? "maker" : "breaker"; }

const char* player_display(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

std::optional<Player> parse_player(const std::string& s) {
  if (s == "maker") return Player::Maker;
  if (s == "breaker") return Player::Breaker;
  return std::nullopt;
}

void GameConfig::validate() const {
  if (m < 1) throw std::invalid_argument("game config: m must be >= 1");
  if (b < 1) throw std::invalid_argument("game config: b must be >= 1");
  if (target_s && *target_s < 2) throw std::invalid_argument("game config: target_s must be >= 2");
}

GameState::GameState(const Graph& g, GameConfig cfg) : g_(&g), cfg_(cfg) {
  cfg_.validate();
  int n = g.vertex_count();
  owner_.assign(static_cast<std::size_t>(g.edge_count()), Owner::Free);
  free_count_ = g.edge_count();
  turn_ = cfg_.first;
  steps_left_ = turn_ == Player::Maker ? cfg_.m : cfg_.b;
  if (free_count_ == 0) over_ = true;

  dsu_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dsu_[static_cast<std::size_t>(v)] = v;
  size_.assign(static_cast<std::size_t>(n), 1);
  free_inc_.resize(static_cast<std::size_t>(n));
  vlist_.resize(static_cast<std::size_t>(n));
  eset_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    free_inc_[static_cast<std::size_t>(v)] = g.degree(v);
    vlist_[static_cast<std::size_t>(v)] = {v};
    for (const auto& nb : g.neighbors(v)) eset_[static_cast<std::size_t>(v)].insert(nb.edge);
  }
  max_component_ = n > 0 ? 1 : 0;
}

GameState::GameState(const Graph& g, GameConfig cfg, const Orientation& o) : GameState(g, cfg) {
  if (!o.matches(g)) throw std::invalid_argument("game state: orientation does not match graph");
  orient_ = &o;
  int n = g.vertex_count();
  tree_root_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) tree_root_[static_cast<std::size_t>(v)] = v;
  parent_.assign(static_cast<std::size_t>(n), -1);
  height_.assign(static_cast<std::size_t>(n), 0);
}

const Orientation& GameState::orientation() const {
  if (!orient_) throw std::logic_error("game state: no orientation attached");
  return *orient_;
}

int GameState::rounds_played() const {
  return history_.empty() ? 0 : history_.back().round;
}

Owner GameState::owner(int edge) const {
  if (edge < 0 || edge >= g_->edge_count()) throw std::invalid_argument("owner: edge out of range");
  return owner_[static_cast<std::size_t>(edge)];
}

int GameState::find(int v) const {
  while (dsu_[static_cast<std::size_t>(v)] != v) {
    dsu_[static_cast<std::size_t>(v)] =
        dsu_[static_cast<std::size_t>(dsu_[static_cast<std::size_t>(v)])];
    v = dsu_[static_cast<std::size_t>(v)];
  }
  return v;
}

void GameState::advance_turn() {
  turn_ = opponent(turn_);
  steps_left_ = turn_ == Player::Maker ? cfg_.m : cfg_.b;
  if (turn_ == cfg_.first) ++round_;
}

void GameState::apply_step(Player p, int edge) {
  if (over_) throw std::logic_error("apply_step: game is over");
  if (p != turn_)
    throw std::invalid_argument(std::string("apply_step: not ") + player_name(p) + "'s turn");
  if (edge < 0 || edge >= g_->edge_count())
    throw std::invalid_argument("apply_step: edge " + std::to_string(edge) + " out of range");
  if (owner_[static_cast<std::size_t>(edge)] != Owner::Free)
    throw std::invalid_argument("apply_step: edge " + std::to_string(edge) + " is not free");

  owner_[static_cast<std::size_t>(edge)] = p == Player::Maker ? Owner::Maker : Owner::Breaker;
  --free_count_;
  history_.push_back({round_, p, edge});

  auto [a, b] = g_->edge(edge);
  int ra = find(a), rb = find(b);
  free_inc_[static_cast<std::size_t>(ra)] -= 1;
  if (rb != ra) free_inc_[static_cast<std::size_t>(rb)] -= 1;

  if (p == Player::Maker) {
    touched_markers_.push_back(a);
    if (ra != rb) {
      merge_components(ra, rb);
    } else {
      last_touched_ = ra;  // intra-component claim; structure is unchanged
    }
    if (cfg_.target_s && max_component_ >= *cfg_.target_s) {
      over_ = true;
      return;
    }
  }

  --steps_left_;
  if (free_count_ == 0)
    over_ = true;
  else if (steps_left_ == 0)
    advance_turn();
}

void GameState::merge_components(int ra, int rb) {
  int new_tree_root = -1;
  if (orient_) {
    auto [tail, head] = orient_->arcs[static_cast<std::size_t>(history_.back().edge)];
    int head_root = find(head) == ra ? ra : rb;
    new_tree_root = tree_root_[static_cast<std::size_t>(head_root == ra ? rb : ra)];
    attach_tree(tail, head, head_root);
  }

  int small = vlist_[static_cast<std::size_t>(ra)].size() <= vlist_[static_cast<std::size_t>(rb)].size()
                  ? ra
                  : rb;
  int big = small == ra ? rb : ra;

  // Free edges running between the two sides were counted once per side.
  int cross = 0;
  for (int v : vlist_[static_cast<std::size_t>(small)])
    for (const auto& nb : g_->neighbors(v))
      if (owner_[static_cast<std::size_t>(nb.edge)] == Owner::Free && find(nb.vertex) == big)
        ++cross;

  free_inc_[static_cast<std::size_t>(big)] =
      free_inc_[static_cast<std::size_t>(ra)] + free_inc_[static_cast<std::size_t>(rb)] - cross;
  size_[static_cast<std::size_t>(big)] += size_[static_cast<std::size_t>(small)];
  auto& bl = vlist_[static_cast<std::size_t>(big)];
  auto& sl = vlist_[static_cast<std::size_t>(small)];
  bl.insert(bl.end(), sl.begin(), sl.end());
  sl.clear();
  sl.shrink_to_fit();
  eset_[static_cast<std::size_t>(big)].merge(eset_[static_cast<std::size_t>(small)]);
  eset_[static_cast<std::size_t>(small)].clear();
  dsu_[static_cast<std::size_t>(small)] = big;
  if (orient_) tree_root_[static_cast<std::size_t>(big)] = new_tree_root;

  max_component_ = std::max(max_component_, size_[static_cast<std::size_t>(big)]);
  last_touched_ = big;
}

void GameState::attach_tree(int tail, int head, int head_root) {
  // Re-root the head-side tree at `head` by flipping the parent chain up to
  // its old root, then hang it below `tail` and recompute its heights.
  int prev = -1, cur = head;
  while (cur != -1) {
    int nxt = parent_[static_cast<std::size_t>(cur)];
    parent_[static_cast<std::size_t>(cur)] = prev;
    prev = cur;
    cur = nxt;
  }
  parent_[static_cast<std::size_t>(head)] = tail;

  const auto& members = vlist_[static_cast<std::size_t>(head_root)];
  if (members.size() == 1) {
    height_[static_cast<std::size_t>(head)] = height_[static_cast<std::size_t>(tail)] + 1;
    return;
  }
  // Heights via memoized walks to `head`; -1 marks "not yet computed".
  for (int v : members) height_[static_cast<std::size_t>(v)] = -1;
  height_[static_cast<std::size_t>(head)] = height_[static_cast<std::size_t>(tail)] + 1;
  std::vector<int> chain;
  for (int v : members) {
    int w = v;
    chain.clear();
    while (height_[static_cast<std::size_t>(w)] == -1) {
      chain.push_back(w);
      w = parent_[static_cast<std::size_t>(w)];
    }
    int h = height_[static_cast<std::size_t>(w)];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      height_[static_cast<std::size_t>(*it)] = ++h;
  }
}

void GameState::pass_move(Player p) {
  if (over_) throw std::logic_error("pass_move: game is over");
  if (p != turn_)
    throw std::invalid_argument(std::string("pass_move: not ") + player_name(p) + "'s turn");
  advance_turn();
}

void GameState::forfeit(Player p) {
  if (over_) throw std::logic_error("forfeit: game is over");
  if (p != Player::Maker) throw std::invalid_argument("forfeit: only Maker can forfeit");
  if (p != turn_) throw std::invalid_argument("forfeit: not Maker's turn");
  forfeited_ = true;
  over_ = true;
}

int GameState::component_root(int v) const {
  if (v < 0 || v >= g_->vertex_count())
    throw std::invalid_argument("component_root: unknown vertex");
  return find(v);
}

int GameState::component_size(int v) const {
  return size_[static_cast<std::size_t>(component_root(v))];
}

const std::vector<int>& GameState::component_vertices(int v) const {
  return vlist_[static_cast<std::size_t>(component_root(v))];
}

int GameState::free_incident(int v) const {
  return free_inc_[static_cast<std::size_t>(component_root(v))];
}

ComponentMeta GameState::component_meta(int v) const {
  ComponentMeta meta;
  int r = component_root(v);
  meta.vertices = vlist_[static_cast<std::size_t>(r)];
  meta.free_incident = free_inc_[static_cast<std::size_t>(r)];
  meta.parent.resize(meta.vertices.size());
  meta.height.resize(meta.vertices.size());
  if (orient_) {
    meta.root = tree_root_[static_cast<std::size_t>(r)];
    meta.type = component_type(v);
    for (std::size_t i = 0; i < meta.vertices.size(); ++i) {
      meta.parent[i] = parent_[static_cast<std::size_t>(meta.vertices[i])];
      meta.height[i] = height_[static_cast<std::size_t>(meta.vertices[i])];
    }
    return meta;
  }
  meta.type = -1;
  meta.root = *std::min_element(meta.vertices.begin(), meta.vertices.end());
  // BFS over Maker edges, lowest root; pair positions via a local index.
  std::vector<int> pos_of(meta.vertices.size());
  for (std::size_t i = 0; i < meta.vertices.size(); ++i) pos_of[i] = static_cast<int>(i);
  std::sort(pos_of.begin(), pos_of.end(),
            [&](int x, int y) { return meta.vertices[static_cast<std::size_t>(x)] <
                                       meta.vertices[static_cast<std::size_t>(y)]; });
  auto index_of = [&](int vertex) {
    int lo = 0, hi = static_cast<int>(pos_of.size()) - 1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      int cand = meta.vertices[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(mid)])];
      if (cand == vertex) return pos_of[static_cast<std::size_t>(mid)];
      if (cand < vertex)
        lo = mid + 1;
      else
        hi = mid - 1;
    }
    return -1;
  };
  std::fill(meta.parent.begin(), meta.parent.end(), -2);  // -2 marks unvisited
  std::deque<int> queue{meta.root};
  meta.parent[static_cast<std::size_t>(index_of(meta.root))] = -1;
  meta.height[static_cast<std::size_t>(index_of(meta.root))] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int ui = index_of(u);
    for (const auto& nb : g_->neighbors(u)) {
      if (owner_[static_cast<std::size_t>(nb.edge)] != Owner::Maker) continue;
      int wi = index_of(nb.vertex);
      if (meta.parent[static_cast<std::size_t>(wi)] != -2) continue;
      meta.parent[static_cast<std::size_t>(wi)] = u;
      meta.height[static_cast<std::size_t>(wi)] = meta.height[static_cast<std::size_t>(ui)] + 1;
      queue.push_back(nb.vertex);
    }
  }
  return meta;
}

int GameState::tree_root(int v) const {
  if (!orient_) throw std::logic_error("tree_root: plain game has no directed trees");
  return tree_root_[static_cast<std::size_t>(component_root(v))];
}

int GameState::tree_parent(int v) const {
  if (!orient_) throw std::logic_error("tree_parent: plain game has no directed trees");
  if (v < 0 || v >= g_->vertex_count()) throw std::invalid_argument("tree_parent: unknown vertex");
  return parent_[static_cast<std::size_t>(v)];
}

int GameState::tree_height(int v) const {
  if (!orient_) throw std::logic_error("tree_height: plain game has no directed trees");
  if (v < 0 || v >= g_->vertex_count()) throw std::invalid_argument("tree_height: unknown vertex");
  return height_[static_cast<std::size_t>(v)];
}

int GameState::component_type(int v) const {
  return static_cast<int>(free_in_arcs(v).size());
}

std::vector<ArcRef> GameState::free_in_arcs(int v) const {
  if (!orient_) throw std::logic_error("free_in_arcs: plain game has no orientation");
  int r = component_root(v);
  std::vector<ArcRef> arcs;
  for (int y : vlist_[static_cast<std::size_t>(r)])
    for (const auto& nb : g_->neighbors(y)) {
      if (owner_[static_cast<std::size_t>(nb.edge)] != Owner::Free) continue;
      const auto& arc = orient_->arcs[static_cast<std::size_t>(nb.edge)];
      if (arc.second == y && find(arc.first) != r) arcs.push_back({nb.edge, arc.first, y});
    }
  return arcs;
}

std::vector<ArcRef> GameState::free_out_arcs(int v) const {
  if (!orient_) throw std::logic_error("free_out_arcs: plain game has no orientation");
  int r = component_root(v);
  std::vector<ArcRef> arcs;
  for (int x : vlist_[static_cast<std::size_t>(r)])
    for (const auto& nb : g_->neighbors(x)) {
      if (owner_[static_cast<std::size_t>(nb.edge)] != Owner::Free) continue;
      const auto& arc = orient_->arcs[static_cast<std::size_t>(nb.edge)];
      if (arc.first == x && find(arc.second) != r) arcs.push_back({nb.edge, x, arc.second});
    }
  return arcs;
}

int GameState::last_touched() const {
  return last_touched_ == -1 ? -1 : find(last_touched_);
}

std::vector<int> GameState::touched_components() const {
  std::vector<int> roots;
  for (int v : touched_markers_) {
    int r = find(v);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  return roots;
}

int GameState::lowest_free_edge() const {
  while (scan_ < g_->edge_count() && owner_[static_cast<std::size_t>(scan_)] != Owner::Free)
    ++scan_;
  return scan_ < g_->edge_count() ? scan_ : -1;
}

int GameState::lowest_free_incident_edge(int v) {
  auto& set = eset_[static_cast<std::size_t>(component_root(v))];
  while (!set.empty()) {
    int e = *set.begin();
    if (owner_[static_cast<std::size_t>(e)] == Owner::Free) return e;
    set.erase(set.begin());
  }
  return -1;
}

GameState new_game(const Graph& g, GameConfig cfg) { return GameState(g, cfg); }

GameState new_game(const Graph& g, GameConfig cfg, const Orientation& o) {
  return GameState(g, cfg, o);
}

}  // namespace cg
