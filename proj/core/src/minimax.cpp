#include "cg/minimax.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cg {

namespace {

class Solver {
 public:
  Solver(const Graph& g, int m, int b, int s) : g_(g), m_(m), b_(b), s_(s) {}

  bool maker_wins(std::uint64_t owners, int turn, int steps) {
    std::uint64_t key = owners | (static_cast<std::uint64_t>(turn) << 32) |
                        (static_cast<std::uint64_t>(steps) << 33);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    bool result;
    if (maker_component_reaches(owners)) {
      result = true;
    } else if (!any_free(owners)) {
      result = false;
    } else {
      result = turn != 0;  // no winning claim found means the mover fails
      std::uint64_t claim_bits = turn == 0 ? 1u : 2u;
      for (int e = 0; e < g_.edge_count(); ++e) {
        if ((owners >> (2 * e)) & 3u) continue;
        std::uint64_t next = owners | (claim_bits << (2 * e));
        int nt = turn, ns = steps - 1;
        if (ns == 0) {
          nt = 1 - turn;
          ns = nt == 0 ? m_ : b_;
        }
        bool w = maker_wins(next, nt, ns);
        if (turn == 0 && w) {
          result = true;
          break;
        }
        if (turn != 0 && !w) {
          result = false;
          break;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool any_free(std::uint64_t owners) const {
    for (int e = 0; e < g_.edge_count(); ++e)
      if (((owners >> (2 * e)) & 3u) == 0) return true;
    return false;
  }

  bool maker_component_reaches(std::uint64_t owners) {
    if (s_ <= 1) return true;
    parent_.resize(static_cast<std::size_t>(g_.vertex_count()));
    size_.assign(static_cast<std::size_t>(g_.vertex_count()), 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    for (int e = 0; e < g_.edge_count(); ++e) {
      if (((owners >> (2 * e)) & 3u) != 1u) continue;
      auto [a, b] = g_.edge(e);
      int ra = find(a), rb = find(b);
      if (ra == rb) continue;
      parent_[static_cast<std::size_t>(rb)] = ra;
      size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
      if (size_[static_cast<std::size_t>(ra)] >= s_) return true;
    }
    return false;
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  const Graph& g_;
  int m_;
  int b_;
  int s_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

Player minimax_solve(const Graph& g, const GameConfig& cfg, int target_s) {
  if (g.edge_count() > 16)
    throw std::invalid_argument("minimax_solve: board exceeds the 16-edge guard");
  cfg.validate();
  if (target_s < 2) throw std::invalid_argument("minimax_solve: target must be at least 2");
  Solver solver(g, cfg.m, cfg.b, target_s);
  int turn = cfg.first == Player::Maker ? 0 : 1;
  int steps = cfg.first == Player::Maker ? cfg.m : cfg.b;
  return solver.maker_wins(0, turn, steps) ? Player::Maker : Player::Breaker;
}

}  // namespace cg
