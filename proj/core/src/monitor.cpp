#include "cg/monitor.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace cg {

namespace {

void dump_component(std::ostringstream& os, const GameState& st, int root) {
  const auto& verts = st.component_vertices(root);
  os << "\n  component root=" << root << " size=" << verts.size()
     << " free_incident=" << st.free_incident(root);
  if (st.oriented()) {
    os << " tree_root=" << st.tree_root(root) << " type=" << st.component_type(root);
    os << "\n  vertices(height):";
    std::size_t shown = 0;
    for (int v : verts) {
      if (shown++ == 200) {
        os << " ...";
        break;
      }
      os << ' ' << v << '(' << st.tree_height(v) << ')';
    }
    os << "\n  free in-arcs:";
    for (const auto& a : st.free_in_arcs(root))
      os << " e" << a.edge << '=' << a.tail << "->" << a.head;
    os << "\n  free out-arcs:";
    for (const auto& a : st.free_out_arcs(root))
      os << " e" << a.edge << '=' << a.tail << "->" << a.head << "(h=" << st.tree_height(a.tail)
         << ')';
  } else {
    os << "\n  vertices:";
    std::size_t shown = 0;
    for (int v : verts) {
      if (shown++ == 200) {
        os << " ...";
        break;
      }
      os << ' ' << v;
    }
  }
}

[[noreturn]] void violate(const std::string& monitor, const GameState& st, int root,
                          const std::string& detail) {
  std::ostringstream os;
  os << monitor << ": " << detail << " (round " << st.round() << ")";
  dump_component(os, st, root);
  throw MonitorViolation(os.str());
}

class FreeEdgeBudgetMonitor final : public Monitor {
 public:
  FreeEdgeBudgetMonitor(int d, int b) : d_(d), b_(b) {}

  std::string name() const override { return "free-edge-budget"; }

  void after_move(const GameState& st, Player mover) override {
    if (st.config().m != 1)
      throw std::logic_error("free-edge-budget monitor covers (1:b) games only");
    if (st.config().b != b_)
      throw std::logic_error("free-edge-budget monitor built for a different bias");
    if (mover != Player::Breaker) return;
    for (int r : st.touched_components()) {
      int s = st.component_size(r);
      int budget = std::max(0, (d_ - 2 - b_) * s + b_ + 2);
      if (st.free_incident(r) > budget)
        violate(name(), st, r,
                "free incident edges exceed budget " + std::to_string(budget) + " for size " +
                    std::to_string(s));
    }
  }

 private:
  int d_;
  int b_;
};

class DirectedTreeMonitor final : public Monitor {
 public:
  std::string name() const override { return "directed-tree"; }

  void after_move(const GameState& st, Player mover) override {
    if (!st.oriented()) throw std::logic_error("directed-tree monitor needs an oriented game");
    if (mover != Player::Breaker) return;
    const Graph& g = st.graph();
    for (int r : st.touched_components()) {
      int tr = st.tree_root(r);
      if (st.component_root(tr) != r) violate(name(), st, r, "tree root outside its component");
      if (st.tree_parent(tr) != -1 || st.tree_height(tr) != 0)
        violate(name(), st, r, "tree root has a parent or nonzero height");
      for (int v : st.component_vertices(r)) {
        if (v == tr) continue;
        int p = st.tree_parent(v);
        if (p == -1) violate(name(), st, r, "second parentless vertex " + std::to_string(v));
        if (st.component_root(p) != r)
          violate(name(), st, r, "parent of " + std::to_string(v) + " lies outside");
        int e = g.edge_index(p, v);
        if (e == -1 || st.owner(e) != Owner::Maker)
          violate(name(), st, r, "parent link of " + std::to_string(v) + " is not a Maker edge");
        if (st.orientation().arcs[static_cast<std::size_t>(e)] != std::pair<int, int>(p, v))
          violate(name(), st, r, "parent link of " + std::to_string(v) + " runs against its arc");
        if (st.tree_height(v) != st.tree_height(p) + 1)
          violate(name(), st, r, "height of " + std::to_string(v) + " is not parent height + 1");
      }
      auto ins = st.free_in_arcs(r);
      for (const auto& arc : ins)
        if (arc.head != tr)
          violate(name(), st, r,
                  "free arc e" + std::to_string(arc.edge) + " enters below the root");
      if (static_cast<int>(ins.size()) > g.degree(tr) - 1)
        violate(name(), st, r, "type exceeds root degree - 1");
    }
  }
};

class OutArcHeightMonitor final : public Monitor {
 public:
  std::string name() const override { return "out-arc-height"; }

  void after_move(const GameState& st, Player mover) override {
    if (!st.oriented()) throw std::logic_error("out-arc-height monitor needs an oriented game");
    sync(st);
    if (mover != Player::Breaker) return;
    for (int r : st.touched_components()) {
      auto it = floor_.find(find(st.component_vertices(r).front()));
      if (it == floor_.end() || it->second <= 0) continue;
      for (const auto& arc : st.free_out_arcs(r))
        if (st.tree_height(arc.tail) < it->second)
          violate(name(), st, r,
                  "free out-arc e" + std::to_string(arc.edge) + " at height " +
                      std::to_string(st.tree_height(arc.tail)) + " below floor " +
                      std::to_string(it->second));
    }
  }

 private:
  // Replays the history against a private union-find so claim-time tail
  // components are known: heights are read live, which is safe because this
  // runs before the next Maker move could reshape any tree.
  void sync(const GameState& st) {
    if (dsu_.empty()) {
      dsu_.resize(static_cast<std::size_t>(st.graph().vertex_count()));
      for (std::size_t i = 0; i < dsu_.size(); ++i) dsu_[i] = static_cast<int>(i);
      rank_.assign(dsu_.size(), 0);
    }
    const auto& hist = st.history();
    for (; pos_ < hist.size(); ++pos_) {
      const auto& step = hist[pos_];
      auto [a, b] = st.graph().edge(step.edge);
      if (step.player == Player::Maker) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
          int fa = floor_value(ra), fb = floor_value(rb);
          int m = unite(ra, rb);
          floor_.erase(ra == m ? rb : ra);
          if (fa > 0 || fb > 0) floor_[m] = std::max(fa, fb);
        }
        last_maker_ = a;
        continue;
      }
      if (last_maker_ == -1) continue;
      const auto& arc = st.orientation().arcs[static_cast<std::size_t>(step.edge)];
      int ft = find(arc.first);
      if (ft != find(last_maker_) || find(arc.second) == ft) continue;
      int h = st.tree_height(arc.first);
      if (h > floor_value(ft)) floor_[ft] = h;
    }
  }

  int find(int v) {
    while (dsu_[static_cast<std::size_t>(v)] != v) {
      dsu_[static_cast<std::size_t>(v)] = dsu_[static_cast<std::size_t>(dsu_[static_cast<std::size_t>(v)])];
      v = dsu_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  int unite(int ra, int rb) {
    if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
    dsu_[static_cast<std::size_t>(rb)] = ra;
    if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)])
      ++rank_[static_cast<std::size_t>(ra)];
    return ra;
  }

  int floor_value(int root) const {
    auto it = floor_.find(root);
    return it == floor_.end() ? 0 : it->second;
  }

  std::vector<int> dsu_;
  std::vector<int> rank_;
  std::unordered_map<int, int> floor_;
  std::size_t pos_ = 0;
  int last_maker_ = -1;
};

class WidthMonitor final : public Monitor {
 public:
  explicit WidthMonitor(int d) : d_(d) {}

  std::string name() const override { return "width"; }

  void after_move(const GameState& st, Player mover) override {
    if (!st.oriented()) throw std::logic_error("width monitor needs an oriented game");
    if (mover != Player::Breaker) return;
    for (int r : st.touched_components()) {
      const auto& verts = st.component_vertices(r);
      int height = 0;
      for (int v : verts) height = std::max(height, st.tree_height(v));
      std::vector<int> at_level(static_cast<std::size_t>(height) + 1, 0);
      std::vector<int> arcs_below(static_cast<std::size_t>(height) + 1, 0);
      for (int v : verts) ++at_level[static_cast<std::size_t>(st.tree_height(v))];
      for (const auto& arc : st.free_out_arcs(r)) {
        int h = st.tree_height(arc.tail);
        if (h + 1 <= height) ++arcs_below[static_cast<std::size_t>(h) + 1];
      }
      int type = st.component_type(r);
      int bound = type >= 1 ? d_ - type : 2 * d_ - 2;
      int passing = 0;
      for (int i = 0; i <= height; ++i) {
        passing += arcs_below[static_cast<std::size_t>(i)];
        int width = at_level[static_cast<std::size_t>(i)] + passing;
        if (width > bound)
          violate(name(), st, r,
                  "width " + std::to_string(width) + " at level " + std::to_string(i) +
                      " exceeds " + std::to_string(bound) + " for type " + std::to_string(type));
      }
    }
  }

 private:
  int d_;
};

}  // namespace

std::unique_ptr<Monitor> free_edge_budget_monitor(int d, int b) {
  return std::make_unique<FreeEdgeBudgetMonitor>(d, b);
}

std::unique_ptr<Monitor> directed_tree_monitor() { return std::make_unique<DirectedTreeMonitor>(); }

std::unique_ptr<Monitor> out_arc_height_monitor() { return std::make_unique<OutArcHeightMonitor>(); }

std::unique_ptr<Monitor> width_monitor(int d) { return std::make_unique<WidthMonitor>(d); }

}  // namespace cg
