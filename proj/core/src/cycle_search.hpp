#pragma once

#include <optional>
#include <vector>

#include "cg/graph.hpp"

// Internal cycle-search primitives shared by the analysis and orientation
// translation units. Not installed.

namespace cg::detail {

inline bool mask_allows(const std::vector<bool>& allowed, int v) {
  return allowed.empty() || allowed[static_cast<std::size_t>(v)];
}

// Minimum BFS collision value dist(u)+dist(w)+1 over non-tree edges seen from
// root r, restricted to allowed vertices with id >= min_vertex, never probing
// past `upper`. The value never undershoots the girth of the restricted
// subgraph, and equals it exactly when r lies on one of its shortest cycles.
// dist/parent must be n-sized and filled with -1; they are restored on exit
// via `touched`.
int bfs_cycle_candidate(const Graph& g, int r, const std::vector<bool>& allowed, int min_vertex,
                        int upper, std::vector<int>& dist, std::vector<int>& parent,
                        std::vector<int>& touched);

// Lexicographically smallest cycle of exactly `len` edges whose lowest vertex
// is r, restricted to allowed vertices with id >= r.
std::optional<std::vector<int>> canonical_cycle_at(const Graph& g, int r, int len,
                                                   const std::vector<bool>& allowed);

}  // namespace cg::detail
