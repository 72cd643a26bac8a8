#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cg/analysis.hpp"
#include "cg/graph.hpp"

namespace cg {

// Direction assignment for every edge of a graph. arcs[e] is (tail, head) and
// must equal edge e of the underlying graph as an unordered pair.
struct Orientation {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  int tail(int e) const { return arcs[static_cast<std::size_t>(e)].first; }
  int head(int e) const { return arcs[static_cast<std::size_t>(e)].second; }
  int edge_count() const { return static_cast<int>(arcs.size()); }

  // Validates each arc against the graph's edge list (std::invalid_argument).
  static Orientation from_arcs(const Graph& g, std::vector<std::pair<int, int>> arcs);
  bool matches(const Graph& g) const;

  // Out-neighbor lists; entry {head, edge} per arc leaving the vertex.
  std::vector<std::vector<Neighbor>> out_adjacency() const;

  // "n m" header, then one "u v" line per edge index meaning the arc u->v.
  std::string to_file() const;
  // Accepts '#' comments and blank lines; throws std::runtime_error with a
  // 1-based line number on malformed input.
  static Orientation parse_file(const std::string& text);
};

// Pairwise disjoint, pairwise nonadjacent induced cycles, each a vertex
// sequence of 3..length_bound vertices in canonical form (lowest vertex
// first, lex-smallest direction).
struct CycleCollection {
  std::vector<std::vector<int>> cycles;
  int length_bound = 0;

  // Per vertex: index into `cycles`, or -1 outside the collection.
  std::vector<int> membership(int n) const;
};

// Greedy maximal collection: repeatedly take the canonical shortest cycle
// among vertices neither in nor adjacent to the collection, while one of
// length <= max_length exists. The residual subgraph ends with girth beyond
// max_length, and shortest cycles are chordless, so every invariant of
// CycleCollection holds by construction.
CycleCollection max_cycle_collection(const Graph& g, int max_length);

// Everything needed to certify a bound on the longest directed path of a
// short_orientation output.
struct OrientationCertificate {
  CycleCollection collection;
  int k = 0;            // branching parameter max(3, ceil(log2 d / log2 log2 d))
  int gamma_delta = 0;  // ceil_log(min_degree - 1, n)
  int gamma_k = 0;      // ceil_log(k - 1, n)
  std::vector<int> levels;  // per vertex: 0 on collection vertices, else BFS distance to them
  std::vector<Coloring> level_colorings;  // index i colors level i+1; -1 entries off-level
  int chi_ub = 0;            // colors used on level 1
  int certified_bound = 0;   // chi_ub + k * gamma_delta + 2 * gamma_k

  std::string to_json() const;
  static OrientationCertificate from_json(const std::string& text);
};

// Builds an orientation with every out-degree >= 1 and all simple directed
// paths of at most certified_bound edges. Requires min degree >= 3 in every
// component (std::invalid_argument otherwise). Steps: collect short cycles
// and orient them cyclically, point every edge touching them inward, level
// the rest by BFS from the collection, orient downward between consecutive
// levels, and break ties inside a level by a proper coloring (DSATUR on
// level 1, reverse-degeneracy greedy elsewhere), higher color to lower.
std::pair<Orientation, OrientationCertificate> short_orientation(const Graph& g);

// Orients every edge from the higher color to the lower one. The result is
// acyclic with directed paths of at most num_colors - 1 edges. Throws
// std::invalid_argument unless c is proper on g.
Orientation gallai_roy_orient(const Graph& g, const Coloring& c);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // empty when passed
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_string() const;  // one "ok|FAIL name detail" line per check
};

// Named structural checks: arcs match edges, positive out-degree, collection
// validity and maximality, level map consistency, coloring rules, parameter
// formulas, no arc leaving the collection, and the certified path bound
// (via the structured solver). Failures are report entries, never throws.
VerificationReport verify_orientation(const Graph& g, const Orientation& o,
                                      const OrientationCertificate& cert);

// Exact longest simple directed path (edges) by exhaustive search with
// memoized reachability pruning. Guarded to n <= 48 (std::invalid_argument).
int longest_directed_path_exact(const Graph& g, const Orientation& o);

// Exact longest directed path in polynomial time for orientations whose
// collection cycles absorb every arc leaving their vertices: longest path in
// the remaining acyclic part, plus c-1 more edges when it ends on a cycle of
// length c. Throws std::invalid_argument when the certificate's cycles do not
// match o, and std::logic_error if the non-cycle arcs are not acyclic.
int longest_directed_path_structured(const Graph& g, const Orientation& o,
                                     const OrientationCertificate& cert);

}  // namespace cg
