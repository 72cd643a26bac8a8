#include "cg/strategy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

namespace cg {

namespace {

// Shared by the reactive Breaker and the counter-tree fallback.
std::optional<int> reactive_choice(GameState& st) {
  int lt = st.last_touched();
  if (lt != -1) {
    int e = st.lowest_free_incident_edge(lt);
    if (e != -1) return e;
  }
  int e = st.lowest_free_edge();
  if (e == -1) return std::nullopt;
  return e;
}

class TreeMaker final : public Strategy {
 public:
  explicit TreeMaker(int root) : root_(root) {}

  std::string name() const override { return "tree[root=" + std::to_string(root_) + "]"; }
  Player side() const override { return Player::Maker; }

  std::optional<int> choose_step(GameState& st) override {
    if (!started_) {
      if (root_ < 0 || root_ >= st.graph().vertex_count())
        throw std::invalid_argument("tree strategy: root vertex out of range");
      in_tree_.assign(static_cast<std::size_t>(st.graph().vertex_count()), false);
      grow(st, root_);
      started_ = true;
    }
    if (last_edge_ != -1) {
      auto [a, b] = st.graph().edge(last_edge_);
      grow(st, a);
      grow(st, b);
      last_edge_ = -1;
    }
    while (!frontier_.empty()) {
      int e = *frontier_.begin();
      auto [a, b] = st.graph().edge(e);
      if (st.owner(e) != Owner::Free ||
          (in_tree_[static_cast<std::size_t>(a)] && in_tree_[static_cast<std::size_t>(b)])) {
        frontier_.erase(frontier_.begin());
        continue;
      }
      last_edge_ = e;
      return e;
    }
    return std::nullopt;  // boundary fully claimed: forfeit
  }

 private:
  void grow(GameState& st, int v) {
    if (in_tree_[static_cast<std::size_t>(v)]) return;
    in_tree_[static_cast<std::size_t>(v)] = true;
    for (const auto& nb : st.graph().neighbors(v)) frontier_.insert(nb.edge);
  }

  int root_;
  bool started_ = false;
  int last_edge_ = -1;
  std::vector<bool> in_tree_;
  std::set<int> frontier_;
};

class RandomAgent final : public Strategy {
 public:
  RandomAgent(Player side, std::uint64_t seed) : side_(side), seed_(seed), rng_(seed) {}

  std::string name() const override { return "random[seed=" + std::to_string(seed_) + "]"; }
  Player side() const override { return side_; }

  std::optional<int> choose_step(GameState& st) override {
    if (st.free_edge_count() == 0) return std::nullopt;
    std::uniform_int_distribution<int> pick(0, st.graph().edge_count() - 1);
    for (;;) {
      int e = pick(rng_);
      if (st.owner(e) == Owner::Free) return e;
    }
  }

 private:
  Player side_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

class GreedyMergeMaker final : public Strategy {
 public:
  std::string name() const override { return "greedy-merge"; }
  Player side() const override { return Player::Maker; }

  std::optional<int> choose_step(GameState& st) override {
    if (!seeded_) {
      for (int e = 0; e < st.graph().edge_count(); ++e) push_current(st, e);
      seeded_ = true;
    }
    // Lazy max-heap: component sizes only grow, so a stale entry ranks at or
    // below its true key and gets re-pushed on inspection.
    while (!heap_.empty()) {
      auto [hi, lo, neg] = heap_.top();
      int e = -neg;
      heap_.pop();
      if (st.owner(e) != Owner::Free) continue;
      auto [a, b] = st.graph().edge(e);
      if (st.component_root(a) == st.component_root(b)) continue;  // intra for good
      int sa = st.component_size(a), sb = st.component_size(b);
      int chi = std::max(sa, sb), clo = std::min(sa, sb);
      if (chi != hi || clo != lo) {
        heap_.emplace(chi, clo, neg);
        continue;
      }
      return e;
    }
    int e = st.lowest_free_edge();
    if (e == -1) return std::nullopt;
    return e;
  }

 private:
  void push_current(GameState& st, int e) {
    auto [a, b] = st.graph().edge(e);
    if (st.owner(e) != Owner::Free || st.component_root(a) == st.component_root(b)) return;
    int sa = st.component_size(a), sb = st.component_size(b);
    heap_.emplace(std::max(sa, sb), std::min(sa, sb), -e);
  }

  bool seeded_ = false;
  std::priority_queue<std::tuple<int, int, int>> heap_;
};

// Answers around the components Maker just touched. With m = 1 the whole
// budget lands on the one touched component, as before. With larger m the
// budget is split across the touched components in proportion to the Maker
// edges each received (largest remainders round up), which is what keeps the
// per-component free-edge invariant alive in the doubly-biased game. Steps
// left over once a component runs dry fall back to the scan cursor.
class ReactiveBreaker final : public Strategy {
 public:
  std::string name() const override { return "reactive"; }
  Player side() const override { return Player::Breaker; }

  std::optional<int> choose_step(GameState& st) override {
    if (st.steps_left() == st.config().b) plan_turn(st);
    while (!plan_.empty()) {
      int v = plan_.front();
      plan_.pop_front();
      int e = st.lowest_free_incident_edge(v);
      if (e != -1) return e;
    }
    return reactive_choice(st);
  }

 private:
  void plan_turn(GameState& st) {
    plan_.clear();
    const auto& hist = st.history();
    std::map<int, int> stake;  // component root -> maker edges this turn
    int total = 0;
    for (auto it = hist.rbegin(); it != hist.rend() && it->player == Player::Maker; ++it) {
      ++stake[st.component_root(st.graph().edge(it->edge).first)];
      ++total;
    }
    if (total == 0) return;
    int b = st.config().b;
    std::vector<std::tuple<int, int, int>> shares;  // (-remainder, root, quota)
    int assigned = 0;
    for (auto [root, s] : stake) {
      shares.emplace_back(-(b * s % total), root, b * s / total);
      assigned += b * s / total;
    }
    std::sort(shares.begin(), shares.end());
    for (auto& share : shares) {
      if (assigned == b) break;
      ++std::get<2>(share);
      ++assigned;
    }
    for (const auto& [rem, root, quota] : shares)
      for (int i = 0; i < quota; ++i) plan_.push_back(root);
  }

  std::deque<int> plan_;
};

class CounterTreeBreaker final : public Strategy {
 public:
  std::string name() const override { return "counter-tree"; }
  Player side() const override { return Player::Breaker; }
  bool deviated() const override { return deviated_; }

  std::optional<int> choose_step(GameState& st) override {
    if (!deviated_) sync(st);
    if (deviated_) return reactive_choice(st);
    while (!respond_.empty()) {
      int e = respond_.front();
      if (st.owner(e) != Owner::Free) {
        respond_.pop_front();
        continue;
      }
      return e;
    }
    return pad(st);
  }

 private:
  void sync(GameState& st) {
    const auto& hist = st.history();
    for (; hist_pos_ < hist.size(); ++hist_pos_) {
      const auto& step = hist[hist_pos_];
      if (step.player != Player::Maker) continue;
      auto [a, b] = st.graph().edge(step.edge);
      if (family_.source == -1) {
        int u = std::min(a, b);
        try {
          family_ = build_path_family(st.graph(), u);
        } catch (const std::invalid_argument&) {
          deviated_ = true;  // graph too sparse for path building
          return;
        }
        view_.assign(static_cast<std::size_t>(st.graph().vertex_count()), false);
        view_[static_cast<std::size_t>(a)] = view_[static_cast<std::size_t>(b)] = true;
        queue_responses(st, std::max(a, b));
        continue;
      }
      bool ina = view_[static_cast<std::size_t>(a)], inb = view_[static_cast<std::size_t>(b)];
      if (ina == inb || family_.edges.count(step.edge) == 0) {
        deviated_ = true;  // not a tree-strategy extension along the family
        return;
      }
      int fresh = ina ? b : a;
      view_[static_cast<std::size_t>(fresh)] = true;
      queue_responses(st, fresh);
    }
  }

  // Free edges at the newly added vertex that leave the tree and avoid P.
  void queue_responses(GameState& st, int fresh) {
    std::vector<int> found;
    for (const auto& nb : st.graph().neighbors(fresh)) {
      if (st.owner(nb.edge) != Owner::Free) continue;
      if (view_[static_cast<std::size_t>(nb.vertex)]) continue;
      if (family_.edges.count(nb.edge)) continue;
      found.push_back(nb.edge);
    }
    std::sort(found.begin(), found.end());
    for (int e : found) respond_.push_back(e);
  }

  std::optional<int> pad(GameState& st) {
    while (pad_scan_ < st.graph().edge_count()) {
      if (st.owner(pad_scan_) == Owner::Free && family_.edges.count(pad_scan_) == 0)
        return pad_scan_;
      ++pad_scan_;
    }
    int e = st.lowest_free_edge();  // only edges of P are left
    if (e == -1) return std::nullopt;
    return e;
  }

  bool deviated_ = false;
  PathFamily family_;
  std::vector<bool> view_;
  std::deque<int> respond_;
  std::size_t hist_pos_ = 0;
  int pad_scan_ = 0;
};

class GlobalBreaker final : public Strategy {
 public:
  explicit GlobalBreaker(const Orientation& o)
      : orient_(&o), name_("global[orient=" + orientation_hash_hex(o) + "]") {}

  std::string name() const override { return name_; }
  Player side() const override { return Player::Breaker; }

  std::optional<int> choose_step(GameState& st) override {
    if (!checked_) {
      if (!st.oriented()) throw std::logic_error("breaker_global requires an oriented game");
      if (!orient_->matches(st.graph()) || st.orientation().arcs != orient_->arcs)
        throw std::invalid_argument("breaker_global: orientation mismatch with the game");
      checked_ = true;
    }
    int lt = st.last_touched();
    if (lt != -1) {
      auto ins = st.free_in_arcs(lt);
      if (!ins.empty()) {
        const ArcRef* best = &ins[0];
        for (const auto& arc : ins) {
          int h = st.tree_height(arc.head), bh = st.tree_height(best->head);
          if (h > bh || (h == bh && arc.edge < best->edge)) best = &arc;
        }
        return best->edge;
      }
      auto outs = st.free_out_arcs(lt);
      if (!outs.empty()) {
        const ArcRef* best = &outs[0];
        for (const auto& arc : outs) {
          int h = st.tree_height(arc.tail), bh = st.tree_height(best->tail);
          if (h < bh || (h == bh && arc.edge < best->edge)) best = &arc;
        }
        return best->edge;
      }
    }
    int e = st.lowest_free_edge();
    if (e == -1) return std::nullopt;
    return e;
  }

 private:
  const Orientation* orient_;
  std::string name_;
  bool checked_ = false;
};

}  // namespace

PathFamily build_path_family(const Graph& g, int u) {
  if (u < 0 || u >= g.vertex_count())
    throw std::invalid_argument("build_path_family: vertex out of range");
  int k = g.min_degree();
  if (k < 3) throw std::invalid_argument("build_path_family: min degree below 3");
  PathFamily fam;
  fam.source = u;
  for (const auto& nb : g.neighbors(u)) {
    auto p = self_colliding_path(g, u, nb.vertex, k);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
      fam.edges.insert(g.edge_index(p.vertices[i], p.vertices[i + 1]));
    fam.edges.insert(g.edge_index(p.vertices.back(),
                                  p.vertices[static_cast<std::size_t>(p.collision_index) - 1]));
    fam.paths.push_back(std::move(p));
  }
  return fam;
}

std::string orientation_hash_hex(const Orientation& o) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(o.n));
  for (const auto& [t, hd] : o.arcs) {
    mix(static_cast<std::uint64_t>(t));
    mix(static_cast<std::uint64_t>(hd));
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::unique_ptr<Strategy> maker_tree_strategy(int root) { return std::make_unique<TreeMaker>(root); }

std::unique_ptr<Strategy> maker_random(std::uint64_t seed) {
  return std::make_unique<RandomAgent>(Player::Maker, seed);
}

std::unique_ptr<Strategy> maker_greedy_merge() { return std::make_unique<GreedyMergeMaker>(); }

std::unique_ptr<Strategy> breaker_reactive_greedy() { return std::make_unique<ReactiveBreaker>(); }

std::unique_ptr<Strategy> breaker_counter_tree() { return std::make_unique<CounterTreeBreaker>(); }

std::unique_ptr<Strategy> breaker_global(const Orientation& o) {
  return std::make_unique<GlobalBreaker>(o);
}

std::unique_ptr<Strategy> breaker_random(std::uint64_t seed) {
  return std::make_unique<RandomAgent>(Player::Breaker, seed);
}

}  // namespace cg
