#include "naive.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace naive {

cg::Rational isoperimetric_value(const cg::Graph& g, int k) {
  int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("naive isoperimetric oracle is guarded to n <= 20");
  if (k < 1) throw std::invalid_argument("k must be positive");
  cg::Rational best(0, 1);
  bool have = false;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size > k) continue;
    int boundary = 0;
    for (const auto& [u, v] : g.edges()) {
      bool iu = mask >> u & 1, iv = mask >> v & 1;
      if (iu != iv) ++boundary;
    }
    cg::Rational r(boundary, size);
    if (!have || r < best) {
      best = r;
      have = true;
    }
  }
  return best;
}

BoardFacts recompute(const cg::Graph& g, const std::vector<cg::Owner>& owners) {
  int n = g.vertex_count();
  BoardFacts facts;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (owners[static_cast<std::size_t>(e)] != cg::Owner::Maker) continue;
    auto [u, v] = g.edge(e);
    parent[static_cast<std::size_t>(find(u))] = find(v);
  }
  std::vector<int> smallest(static_cast<std::size_t>(n), n);
  for (int v = 0; v < n; ++v) smallest[static_cast<std::size_t>(find(v))] = std::min(smallest[static_cast<std::size_t>(find(v))], v);
  facts.component_of.resize(static_cast<std::size_t>(n));
  std::vector<int> size_of(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    facts.component_of[static_cast<std::size_t>(v)] = smallest[static_cast<std::size_t>(find(v))];
    ++size_of[static_cast<std::size_t>(find(v))];
  }
  facts.component_size.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    facts.component_size[static_cast<std::size_t>(v)] = size_of[static_cast<std::size_t>(find(v))];
    facts.max_component = std::max(facts.max_component, size_of[static_cast<std::size_t>(find(v))]);
  }
  facts.free_incident.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> per_root(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (owners[static_cast<std::size_t>(e)] != cg::Owner::Free) continue;
    ++facts.free_edges;
    auto [u, v] = g.edge(e);
    int ru = find(u), rv = find(v);
    ++per_root[static_cast<std::size_t>(ru)];
    if (rv != ru) ++per_root[static_cast<std::size_t>(rv)];
  }
  for (int v = 0; v < n; ++v)
    facts.free_incident[static_cast<std::size_t>(v)] = per_root[static_cast<std::size_t>(find(v))];
  return facts;
}

}  // namespace naive
