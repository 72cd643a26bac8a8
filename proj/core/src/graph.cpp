#include "cg/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cg/rng.hpp"

namespace cg {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].first) + "," +
                                  std::to_string(edges[i].second) + ")");
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  adj_.assign(n_, {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    auto [u, v] = edges_[e];
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
  }
  for (auto& nbrs : adj_)
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

namespace {

// Strips comments, returns per-line token streams with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(lineno, line);
  }
  return out;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
  throw std::runtime_error("edge list parse error, line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph Graph::parse_edge_list(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::runtime_error("edge list parse error: empty document");

  auto parse_two_ints = [](const std::string& s, int lineno) -> std::pair<long, long> {
    std::istringstream ls(s);
    long a, b;
    if (!(ls >> a >> b)) parse_fail(lineno, "expected two integers");
    std::string rest;
    if (ls >> rest) parse_fail(lineno, "trailing content '" + rest + "'");
    return {a, b};
  };

  auto [n_raw, m_raw] = parse_two_ints(lines[0].second, lines[0].first);
  if (n_raw < 0 || m_raw < 0) parse_fail(lines[0].first, "negative header value");
  int n = static_cast<int>(n_raw);
  long m = m_raw;
  if (static_cast<long>(lines.size()) - 1 != m)
    throw std::runtime_error("edge list parse error: header declares " + std::to_string(m) +
                             " edges but document has " + std::to_string(lines.size() - 1));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [lineno, body] = lines[i];
    auto [u, v] = parse_two_ints(body, lineno);
    if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(lineno, "vertex id out of range");
    if (u == v) parse_fail(lineno, "loop at vertex " + std::to_string(u));
    std::pair<int, int> e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second)
      parse_fail(lineno, "duplicate edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
    edges.push_back(e);
  }
  return from_edges(n, std::move(edges));
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

int Graph::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  const auto& nbrs = adj_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& a, int x) { return a.vertex < x; });
  if (it != nbrs.end() && it->vertex == v) return it->edge;
  return -1;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(n_, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& nb : adj_[v])
        if (label[nb.vertex] == -1) {
          label[nb.vertex] = next;
          stack.push_back(nb.vertex);
        }
    }
    ++next;
  }
  return label;
}

int Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

std::uint64_t Graph::canonical_hash() const {
  std::string doc = to_edge_list();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : doc) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Graph::canonical_hash_hex() const {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = canonical_hash();
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

ValidationReport validate(const Graph& g) {
  ValidationReport r;
  r.simple = true;
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  if (g.vertex_count() > 0 && r.min_degree == r.max_degree) r.regular_degree = r.min_degree;
  r.component_count = g.component_count();
  return r;
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0) throw std::invalid_argument("n and d must be nonnegative");
  if (d >= n && !(n == 0 && d == 0))
    throw std::invalid_argument("degree must be smaller than vertex count");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("n*d must be even for a d-regular graph");

  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;

  // whole-sample rejection keeps the draw uniform over simple d-regular
  // graphs; acceptance decays like exp(-(d*d-1)/4), so this budget covers
  // d <= 6 with huge margin but would not survive d >= 8
  const int budget = 400000;
  for (int attempt = 0; attempt < budget; ++attempt) {
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, std::move(edges));
  }
  throw std::runtime_error("random_regular(" + std::to_string(n) + "," + std::to_string(d) +
                           "): rejection budget of " + std::to_string(budget) +
                           " samples exhausted");
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_ary_tree(int r, int levels) {
  if (r < 1 || levels < 1) throw std::invalid_argument("arity and level count must be positive");
  long long total = 0, layer = 1;
  for (int i = 0; i < levels; ++i) {
    total += layer;
    layer *= r;
    if (total > 1000000) throw std::invalid_argument("tree too large");
  }
  int n = static_cast<int>(total);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int c = 1; c <= r; ++c) {
      long long child = static_cast<long long>(v) * r + c;
      if (child < n) edges.emplace_back(v, static_cast<int>(child));
    }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace cg
