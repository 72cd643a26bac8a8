#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cg {

struct Neighbor {
  int vertex;
  int edge;
};

// Immutable simple undirected graph with a canonical edge order: every edge
// is stored as (min,max) and the edge list is sorted lexicographically, so
// edge indices are reproducible across runs and implementations. All
// tie-breaking conventions elsewhere in the library lean on this order.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes and validates; throws std::invalid_argument on loops,
  // duplicate edges, or endpoints outside [0, n).
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  // Parses the edge-list format: header "n m", then m lines "u v".
  // '#' starts a comment; blank lines are skipped. Throws std::runtime_error
  // with a 1-based line number on malformed input.
  static Graph parse_edge_list(const std::string& text);

  // Canonical serialization. parse_edge_list(to_edge_list()) round-trips
  // byte-identically; comments are never emitted.
  std::string to_edge_list() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Index of {u,v} in the canonical order, or -1 if not an edge.
  int edge_index(int u, int v) const;

  int min_degree() const;
  int max_degree() const;

  // Connected-component label per vertex; labels are assigned in order of the
  // lowest vertex in each component.
  std::vector<int> component_labels() const;
  int component_count() const;

  // FNV-1a over the canonical serialization; used to tie transcripts and
  // orientations to the graph they were produced from.
  std::uint64_t canonical_hash() const;
  std::string canonical_hash_hex() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Neighbor>> adj_;

  void build_adjacency();
};

struct ValidationReport {
  bool simple = true;  // from_edges enforces this; kept for report symmetry
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> regular_degree;
  int component_count = 0;
};

ValidationReport validate(const Graph& g);

// Uniform d-regular graph via the pairing model with whole-sample rejection:
// resample the full stub matching until it is loop- and multi-edge-free.
// Deterministic for a fixed (n, d, seed); throws std::invalid_argument when
// n*d is odd or d >= n, std::runtime_error when 10000 samples all fail.
Graph random_regular(int n, int d, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3

// Complete r-ary tree with `levels` levels (a single root for levels == 1),
// heap-numbered so vertex v's children are r*v+1 .. r*v+r.
Graph complete_ary_tree(int r, int levels);

}  // namespace cg
