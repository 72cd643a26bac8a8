#pragma once

#include <optional>
#include <vector>

#include "cg/graph.hpp"
#include "cg/rational.hpp"

// Undirected structure analysis. Path and cycle lengths are counted in edges
// throughout the library.

namespace cg {

// Smallest t >= 0 with base^t >= x; exact integer arithmetic (base >= 2).
int ceil_log(int base, long long x);

// Length of a shortest cycle, or nullopt for forests. The overload with a
// mask works on the subgraph induced by `allowed`.
std::optional<int> girth(const Graph& g);
std::optional<int> girth(const Graph& g, const std::vector<bool>& allowed);

// Canonical shortest cycle in the subgraph induced by `allowed` (whole graph
// when the mask is empty): minimal length, then lowest contained vertex, then
// the lexicographically smallest vertex sequence starting there. Shortest
// cycles are chordless, so the result is always induced.
std::optional<std::vector<int>> shortest_cycle(const Graph& g,
                                               const std::vector<bool>& allowed = {});

struct SelfCollidingPath {
  std::vector<int> vertices;  // simple path v_1..v_k starting with the edge (u,v)
  int collision_index = 0;    // 1-based i: the last vertex is adjacent to vertices[i-1]

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int tail_length() const { return collision_index - 1; }
  int body_length() const { return length() - tail_length() + 1; }  // cycle edges
};

// Follows non-backtracking walks out of the arc (u,v) until two of them meet.
// Requires k >= 3 and min degree >= k; then with gamma = ceil_log(k-1, n) the
// result satisfies length <= 2*gamma and every body vertex lies within
// distance gamma of u inside the path-plus-closing-edge subgraph.
SelfCollidingPath self_colliding_path(const Graph& g, int u, int v, int k);

struct IsoperimetricProfile {
  std::vector<Rational> values;  // values[k-1] = min over |S| <= k of |E(S,V\S)| / |S|

  Rational at(int k) const { return values.at(static_cast<std::size_t>(k) - 1); }
  int kmax() const { return static_cast<int>(values.size()); }
};

// Exact edge-expansion profile. Only connected sets are enumerated: the ratio
// of a disconnected set is a mediant of its parts' ratios, hence at least the
// smallest of them. Throws std::runtime_error when the enumeration exceeds
// 10^7 sets; requires 1 <= kmax <= n/2.
IsoperimetricProfile isoperimetric_profile(const Graph& g, int kmax);

struct DegeneracyOrder {
  std::vector<int> order;  // repeated removal of a minimum-degree vertex
  int degeneracy = 0;      // max degree seen at removal time
};
DegeneracyOrder degeneracy_order(const Graph& g);

struct Coloring {
  std::vector<int> colors;  // per vertex, in [0, num_colors)
  int num_colors = 0;
};

// First-fit along `order`, which must be a permutation of the vertices.
// Uses at most degeneracy(g)+1 colors when fed a reversed degeneracy order.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

// DSATUR heuristic; ties broken by saturation, then degree, then lowest index.
Coloring dsatur_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const Coloring& c);

// Exact chromatic number by DSATUR-guided branch and bound; guarded to n <= 30.
int exact_chromatic_number(const Graph& g);

// Subgraph induced on `vertices` (sorted internally); original[i] maps local
// vertex i back to the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

}  // namespace cg
