#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <queue>
#include <utility>

namespace fixtures {

cg::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, i + 5);                // spoke
  }
  return cg::Graph::from_edges(10, std::move(e));
}

cg::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return cg::Graph::from_edges(n, std::move(e));
}

namespace {

std::vector<std::vector<char>> adjacency_matrix(const cg::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> m(static_cast<std::size_t>(n),
                                   std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.edges()) {
    m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  return m;
}

bool extend_map(const std::vector<std::vector<char>>& ma, const std::vector<std::vector<char>>& mb,
                std::vector<int>& map, std::vector<char>& used, int next) {
  int n = static_cast<int>(ma.size());
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int prev = 0; prev < next; ++prev) {
      if (ma[static_cast<std::size_t>(next)][static_cast<std::size_t>(prev)] !=
          mb[static_cast<std::size_t>(cand)][static_cast<std::size_t>(map[static_cast<std::size_t>(prev)])]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (extend_map(ma, mb, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return false;
}

// Sorted-rows distance matrix. Isomorphism-invariant and strong enough to
// keep the dedup buckets tiny on cubic graphs up to n = 10.
std::vector<int> distance_signature(const cg::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), n);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(v))
        if (dist[static_cast<std::size_t>(nb.vertex)] == n) {
          dist[static_cast<std::size_t>(nb.vertex)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push(nb.vertex);
        }
    }
    std::sort(dist.begin(), dist.end());
    rows.push_back(std::move(dist));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

}  // namespace

bool isomorphic(const cg::Graph& a, const cg::Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto ma = adjacency_matrix(a);
  auto mb = adjacency_matrix(b);
  std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(a.vertex_count()), 0);
  return extend_map(ma, mb, map, used, 0);
}

std::vector<cg::Graph> cubic_catalog(int n) {
  int samples = 0;
  switch (n) {
    case 4: samples = 300; break;
    case 6: samples = 3000; break;
    case 8: samples = 12000; break;
    case 10: samples = 30000; break;
    default: samples = 4000 * n; break;
  }
  std::vector<cg::Graph> reps;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (int seed = 0; seed < samples; ++seed) {
    cg::Graph g = cg::random_regular(n, 3, static_cast<std::uint64_t>(seed));
    if (g.component_count() != 1) continue;
    auto sig = distance_signature(g);
    auto& bucket = buckets[sig];
    bool fresh = true;
    for (std::size_t idx : bucket)
      if (isomorphic(g, reps[idx])) {
        fresh = false;
        break;
      }
    if (fresh) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
  return reps;
}

}  // namespace fixtures
