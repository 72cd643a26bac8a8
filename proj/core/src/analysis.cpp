#include "cg/analysis.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <stdexcept>

#include "cycle_search.hpp"

namespace cg {

int ceil_log(int base, long long x) {
  if (base < 2) throw std::invalid_argument("ceil_log needs base >= 2");
  int t = 0;
  long long p = 1;
  while (p < x) {
    p *= base;
    ++t;
  }
  return t;
}

namespace detail {

int bfs_cycle_candidate(const Graph& g, int r, const std::vector<bool>& allowed, int min_vertex,
                        int upper, std::vector<int>& dist, std::vector<int>& parent,
                        std::vector<int>& touched) {
  touched.clear();
  int best = INT_MAX;
  dist[r] = 0;
  parent[r] = -1;
  touched.push_back(r);
  std::deque<int> queue{r};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (2 * dist[u] + 1 >= best || 2 * dist[u] + 1 > upper) break;
    for (const auto& nb : g.neighbors(u)) {
      int w = nb.vertex;
      if (w < min_vertex || !mask_allows(allowed, w)) continue;
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        touched.push_back(w);
        queue.push_back(w);
      } else if (w != parent[u]) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  for (int v : touched) dist[v] = -1;
  return best;
}

// DFS step of canonical_cycle_at: extends `path` by ascending neighbor id, so
// the first complete cycle found is lexicographically smallest. dist holds
// BFS distances to r in the restricted subgraph (-1 where unreachable); a
// vertex too far to close the cycle in time is pruned.
bool lex_min_cycle_dfs(const Graph& g, int r, int len, const std::vector<bool>& allowed,
                       const std::vector<int>& dist, std::vector<char>& on_path,
                       std::vector<int>& path) {
  int u = path.back();
  int depth = static_cast<int>(path.size()) - 1;
  if (depth == len - 1) return g.edge_index(u, r) >= 0;
  for (const auto& nb : g.neighbors(u)) {
    int w = nb.vertex;
    if (w <= r || !mask_allows(allowed, w) || on_path[w]) continue;
    if (dist[w] == -1 || dist[w] > len - depth - 1) continue;
    on_path[w] = 1;
    path.push_back(w);
    if (lex_min_cycle_dfs(g, r, len, allowed, dist, on_path, path)) return true;
    path.pop_back();
    on_path[w] = 0;
  }
  return false;
}

std::optional<std::vector<int>> canonical_cycle_at(const Graph& g, int r, int len,
                                                   const std::vector<bool>& allowed) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::deque<int> queue{r};
  dist[r] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] >= len) break;
    for (const auto& nb : g.neighbors(u))
      if (nb.vertex >= r && mask_allows(allowed, nb.vertex) && dist[nb.vertex] == -1) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push_back(nb.vertex);
      }
  }
  std::vector<char> on_path(n, 0);
  on_path[r] = 1;
  std::vector<int> path{r};
  if (lex_min_cycle_dfs(g, r, len, allowed, dist, on_path, path)) return path;
  return std::nullopt;
}

}  // namespace detail

using detail::bfs_cycle_candidate;
using detail::canonical_cycle_at;
using detail::mask_allows;

std::optional<int> girth(const Graph& g) { return girth(g, {}); }

std::optional<int> girth(const Graph& g, const std::vector<bool>& allowed) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1), parent(n, -1), touched;
  int best = INT_MAX;
  for (int r = 0; r < n; ++r) {
    if (!mask_allows(allowed, r)) continue;
    best = std::min(best, bfs_cycle_candidate(g, r, allowed, 0, best, dist, parent, touched));
    if (best == 3) break;
  }
  if (best == INT_MAX) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g, const std::vector<bool>& allowed) {
  auto len = girth(g, allowed);
  if (!len) return std::nullopt;
  int n = g.vertex_count();
  std::vector<int> dist(n, -1), parent(n, -1), touched;
  for (int r = 0; r < n; ++r) {
    if (!mask_allows(allowed, r)) continue;
    // Cheap filter first: no collision candidate at *len means no such cycle.
    if (bfs_cycle_candidate(g, r, allowed, r, *len, dist, parent, touched) > *len) continue;
    if (auto cyc = canonical_cycle_at(g, r, *len, allowed)) return cyc;
  }
  return std::nullopt;  // unreachable when girth() found a cycle
}

SelfCollidingPath self_colliding_path(const Graph& g, int u, int v, int k) {
  int n = g.vertex_count();
  if (k < 3) throw std::invalid_argument("self_colliding_path requires k >= 3");
  if (g.min_degree() < k) throw std::invalid_argument("self_colliding_path: min degree < k");
  if (g.edge_index(u, v) < 0) throw std::invalid_argument("self_colliding_path: (u,v) not an edge");

  const int gamma = ceil_log(k - 1, n);

  // BFS tree over vertices reached by non-backtracking walks out of (u,v).
  // Until the first collision every tree path is a simple path, so two walks
  // meeting is exactly a vertex collision.
  std::vector<int> depth(n, -1), parent(n, -1);
  depth[u] = 0;
  depth[v] = 1;
  parent[v] = u;
  std::deque<int> queue{v};

  auto tree_path = [&](int t) {
    std::vector<int> p;
    for (int x = t; x != -1; x = parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
  };

  auto build = [&](int x, int w) -> std::optional<SelfCollidingPath> {
    std::vector<int> a = tree_path(x);  // u .. x
    std::vector<int> b = tree_path(w);  // u .. w
    std::size_t i = 0;
    while (i + 1 < a.size() && i + 1 < b.size() && a[i + 1] == b[i + 1]) ++i;
    // z = a[i] = b[i] is the branch point; the two walk suffixes are disjoint.
    std::vector<int> body(a.begin() + static_cast<long>(i), a.end());
    if (w != a[i])
      for (std::size_t j = b.size() - 1; j > i; --j) body.push_back(b[j]);
    std::size_t cycle_len = body.size();  // edges on the body cycle
    if (cycle_len < 3) return std::nullopt;

    SelfCollidingPath p;
    p.vertices.assign(a.begin(), a.begin() + static_cast<long>(i));
    p.vertices.insert(p.vertices.end(), body.begin(), body.end());
    p.collision_index = static_cast<int>(i) + 1;

    if (p.length() > 2 * gamma) return std::nullopt;
    for (std::size_t j = 0; j < cycle_len; ++j) {
      std::size_t around = std::min(j, cycle_len - j);
      if (static_cast<int>(i + around) > gamma) return std::nullopt;
    }
    return p;
  };

  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(x)) {
      int w = nb.vertex;
      if (w == parent[x]) continue;
      if (depth[w] == -1) {
        depth[w] = depth[x] + 1;
        parent[w] = x;
        queue.push_back(w);
      } else if (auto p = build(x, w)) {
        return *p;
      }
    }
  }
  throw std::logic_error("self_colliding_path: no compliant collision found");
}

namespace {

struct ProfileAccumulator {
  std::vector<long long> min_cut;  // per set size, 1-based
  long long enumerated = 0;
  static constexpr long long kBudget = 10000000;

  explicit ProfileAccumulator(int kmax) : min_cut(static_cast<std::size_t>(kmax) + 1, LLONG_MAX) {}

  void record(int size, long long cut) {
    if (++enumerated > kBudget)
      throw std::runtime_error("isoperimetric_profile: enumeration budget of 10^7 sets exceeded");
    min_cut[static_cast<std::size_t>(size)] = std::min(min_cut[static_cast<std::size_t>(size)], cut);
  }
};

// Connected-set enumeration rooted at the set's lowest vertex. `blocked`
// holds everything already in the set or ever offered as an extension along
// the current branch, which makes every connected set appear exactly once.
void extend_sets(const Graph& g, int root, int kmax, std::vector<char>& in_set,
                 std::vector<char>& blocked, std::vector<int>& ext, int size, long long cut,
                 ProfileAccumulator& acc) {
  for (std::size_t idx = 0; idx < ext.size(); ++idx) {
    int v = ext[idx];
    long long inside = 0;
    for (const auto& nb : g.neighbors(v)) inside += in_set[nb.vertex];
    long long next_cut = cut + g.degree(v) - 2 * inside;
    acc.record(size + 1, next_cut);
    if (size + 1 < kmax) {
      std::vector<int> next_ext(ext.begin() + static_cast<long>(idx) + 1, ext.end());
      std::vector<int> newly_blocked;
      for (const auto& nb : g.neighbors(v))
        if (nb.vertex > root && !blocked[nb.vertex]) {
          blocked[nb.vertex] = 1;
          newly_blocked.push_back(nb.vertex);
          next_ext.push_back(nb.vertex);
        }
      in_set[v] = 1;
      extend_sets(g, root, kmax, in_set, blocked, next_ext, size + 1, next_cut, acc);
      in_set[v] = 0;
      for (int w : newly_blocked) blocked[w] = 0;
    }
  }
}

}  // namespace

IsoperimetricProfile isoperimetric_profile(const Graph& g, int kmax) {
  int n = g.vertex_count();
  if (kmax < 1 || kmax > n / 2)
    throw std::invalid_argument("isoperimetric_profile: kmax must be in [1, n/2]");

  ProfileAccumulator acc(kmax);
  std::vector<char> in_set(n, 0), blocked(n, 0);
  for (int r = 0; r < n; ++r) {
    acc.record(1, g.degree(r));
    if (kmax == 1) continue;
    in_set[r] = 1;
    blocked[r] = 1;
    std::vector<int> ext;
    for (const auto& nb : g.neighbors(r))
      if (nb.vertex > r) {
        ext.push_back(nb.vertex);
        blocked[nb.vertex] = 1;
      }
    extend_sets(g, r, kmax, in_set, blocked, ext, 1, g.degree(r), acc);
    in_set[r] = 0;
    blocked[r] = 0;
    for (int w : ext) blocked[w] = 0;
  }

  IsoperimetricProfile profile;
  std::optional<Rational> best;
  for (int k = 1; k <= kmax; ++k) {
    if (acc.min_cut[static_cast<std::size_t>(k)] != LLONG_MAX) {
      Rational candidate{acc.min_cut[static_cast<std::size_t>(k)], k};
      if (!best || candidate < *best) best = candidate;
    }
    profile.values.push_back(*best);  // k = 1 is always populated
  }
  return profile;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  std::vector<std::set<int>> bucket(static_cast<std::size_t>(maxdeg) + 1);
  for (int v = 0; v < n; ++v) bucket[static_cast<std::size_t>(deg[v])].insert(v);

  DegeneracyOrder out;
  std::vector<char> removed(n, 0);
  int cursor = 0;
  for (int step = 0; step < n; ++step) {
    cursor = std::max(0, cursor - 1);
    while (cursor <= maxdeg && bucket[static_cast<std::size_t>(cursor)].empty()) ++cursor;
    int v = *bucket[static_cast<std::size_t>(cursor)].begin();
    bucket[static_cast<std::size_t>(cursor)].erase(bucket[static_cast<std::size_t>(cursor)].begin());
    removed[v] = 1;
    out.order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, deg[v]);
    for (const auto& nb : g.neighbors(v)) {
      int w = nb.vertex;
      if (removed[w]) continue;
      bucket[static_cast<std::size_t>(deg[w])].erase(w);
      bucket[static_cast<std::size_t>(--deg[w])].insert(w);
    }
  }
  return out;
}

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("greedy_coloring: order must cover all vertices");
  Coloring c;
  c.colors.assign(n, -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(static_cast<std::size_t>(c.num_colors) + 1, 0);
    for (const auto& nb : g.neighbors(v)) {
      int col = c.colors[nb.vertex];
      if (col >= 0 && col < static_cast<int>(used.size())) used[static_cast<std::size_t>(col)] = 1;
    }
    int col = 0;
    while (used[static_cast<std::size_t>(col)]) ++col;
    c.colors[v] = col;
    c.num_colors = std::max(c.num_colors, col + 1);
  }
  return c;
}

Coloring dsatur_coloring(const Graph& g) {
  int n = g.vertex_count();
  Coloring c;
  c.colors.assign(n, -1);
  std::vector<std::set<int>> nbr_colors(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (c.colors[v] != -1) continue;
      if (pick == -1) {
        pick = v;
        continue;
      }
      auto key = [&](int x) { return std::pair(static_cast<int>(nbr_colors[x].size()), g.degree(x)); };
      if (key(v) > key(pick)) pick = v;  // lowest index wins ties via scan order
    }
    int col = 0;
    while (nbr_colors[pick].count(col)) ++col;
    c.colors[pick] = col;
    c.num_colors = std::max(c.num_colors, col + 1);
    for (const auto& nb : g.neighbors(pick)) nbr_colors[nb.vertex].insert(col);
  }
  return c;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.colors[v] < 0 || c.colors[v] >= c.num_colors) return false;
  for (auto [a, b] : g.edges())
    if (c.colors[a] == c.colors[b]) return false;
  return true;
}

namespace {

bool kcolor_backtrack(const Graph& g, int k, std::vector<int>& colors,
                      std::vector<std::set<int>>& nbr_colors, int colored, int max_used) {
  int n = g.vertex_count();
  if (colored == n) return true;
  int pick = -1;
  for (int v = 0; v < n; ++v) {
    if (colors[v] != -1) continue;
    if (pick == -1 ||
        std::pair(static_cast<int>(nbr_colors[v].size()), g.degree(v)) >
            std::pair(static_cast<int>(nbr_colors[pick].size()), g.degree(pick)))
      pick = v;
  }
  int limit = std::min(k, max_used + 1);  // a fresh color is interchangeable with any other
  for (int col = 0; col < limit; ++col) {
    if (nbr_colors[pick].count(col)) continue;
    colors[pick] = col;
    std::vector<int> added;
    for (const auto& nb : g.neighbors(pick))
      if (nbr_colors[nb.vertex].insert(col).second) added.push_back(nb.vertex);
    if (kcolor_backtrack(g, k, colors, nbr_colors, colored + 1, std::max(max_used, col + 1)))
      return true;
    for (int w : added) nbr_colors[w].erase(col);
    colors[pick] = -1;
  }
  return false;
}

}  // namespace

int exact_chromatic_number(const Graph& g) {
  int n = g.vertex_count();
  if (n > 30) throw std::invalid_argument("exact_chromatic_number is guarded to n <= 30");
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  // Greedy clique on descending degree gives the starting lower bound.
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return std::pair(-g.degree(a), a) < std::pair(-g.degree(b), b);
  });
  std::vector<int> clique;
  for (int v : by_degree) {
    bool fits = std::all_of(clique.begin(), clique.end(),
                            [&](int u) { return g.edge_index(u, v) >= 0; });
    if (fits) clique.push_back(v);
  }
  int upper = dsatur_coloring(g).num_colors;
  for (int k = static_cast<int>(clique.size()); k <= upper; ++k) {
    std::vector<int> colors(n, -1);
    std::vector<std::set<int>> nbr_colors(n);
    if (kcolor_backtrack(g, k, colors, nbr_colors, 0, 0)) return k;
  }
  return upper;  // unreachable: DSATUR witnesses `upper` colors suffice
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int v : vertices)
    for (const auto& nb : g.neighbors(v))
      if (v < nb.vertex && local[nb.vertex] != -1) edges.emplace_back(local[v], local[nb.vertex]);
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges));
  out.original = std::move(vertices);
  return out;
}

}  // namespace cg
