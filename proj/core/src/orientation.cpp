#include "cg/orientation.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cycle_search.hpp"

namespace cg {

Orientation Orientation::from_arcs(const Graph& g, std::vector<std::pair<int, int>> arcs) {
  if (static_cast<int>(arcs.size()) != g.edge_count())
    throw std::invalid_argument("orientation: arc count differs from edge count");
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    auto [u, v] = g.edge(static_cast<int>(e));
    if (arcs[e] != std::pair(u, v) && arcs[e] != std::pair(v, u))
      throw std::invalid_argument("orientation: arc " + std::to_string(e) +
                                  " does not match its edge");
  }
  Orientation o;
  o.n = g.vertex_count();
  o.arcs = std::move(arcs);
  return o;
}

bool Orientation::matches(const Graph& g) const {
  if (n != g.vertex_count() || static_cast<int>(arcs.size()) != g.edge_count()) return false;
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    auto [u, v] = g.edge(static_cast<int>(e));
    if (arcs[e] != std::pair(u, v) && arcs[e] != std::pair(v, u)) return false;
  }
  return true;
}

std::vector<std::vector<Neighbor>> Orientation::out_adjacency() const {
  std::vector<std::vector<Neighbor>> out(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < arcs.size(); ++e)
    out[static_cast<std::size_t>(arcs[e].first)].push_back(
        Neighbor{arcs[e].second, static_cast<int>(e)});
  return out;
}

std::string Orientation::to_file() const {
  std::string out = std::to_string(n) + " " + std::to_string(arcs.size()) + "\n";
  for (const auto& [t, h] : arcs) out += std::to_string(t) + " " + std::to_string(h) + "\n";
  return out;
}

Orientation Orientation::parse_file(const std::string& text) {
  std::vector<std::pair<std::string, int>> lines;  // content, 1-based line number
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(raw, lineno);
  }
  auto fail = [](int line, const std::string& why) -> Orientation {
    throw std::runtime_error("orientation file line " + std::to_string(line) + ": " + why);
  };
  if (lines.empty()) return fail(1, "missing header");
  auto two_ints = [&](const std::pair<std::string, int>& entry, int& a, int& b) {
    std::istringstream s(entry.first);
    std::string extra;
    if (!(s >> a >> b) || (s >> extra)) fail(entry.second, "expected two integers");
  };
  int n = 0, m = 0;
  two_ints(lines[0], n, m);
  if (n < 0 || m < 0) fail(lines[0].second, "negative header value");
  if (static_cast<int>(lines.size()) - 1 != m)
    fail(lines.back().second, "expected " + std::to_string(m) + " arc lines, found " +
                                  std::to_string(lines.size() - 1));
  Orientation o;
  o.n = n;
  for (int e = 0; e < m; ++e) {
    int t = 0, h = 0;
    two_ints(lines[static_cast<std::size_t>(e) + 1], t, h);
    if (t < 0 || h < 0 || t >= n || h >= n) fail(lines[static_cast<std::size_t>(e) + 1].second,
                                                 "vertex out of range");
    if (t == h) fail(lines[static_cast<std::size_t>(e) + 1].second, "self-loop arc");
    o.arcs.emplace_back(t, h);
  }
  return o;
}

std::vector<int> CycleCollection::membership(int n) const {
  std::vector<int> member(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (int v : cycles[i]) member[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return member;
}

CycleCollection max_cycle_collection(const Graph& g, int max_length) {
  int n = g.vertex_count();
  CycleCollection out;
  out.length_bound = max_length;
  if (max_length < 3 || n == 0) return out;

  std::vector<bool> allowed(static_cast<std::size_t>(n), true);
  // lb[r]: lower bound on the shortest cycle through r among allowed vertices
  // >= r. Vertex removals only destroy cycles, so cached bounds stay valid.
  std::vector<int> lb(static_cast<std::size_t>(n), 3);
  std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
      touched;

  // Length-by-length scan is equivalent to repeatedly extracting the global
  // canonical shortest cycle: cycles never reappear, so when round c reaches
  // root r every cycle shorter than c is gone and none of length c has a
  // lower vertex left.
  for (int c = 3; c <= max_length; ++c) {
    for (int r = 0; r < n; ++r) {
      if (!allowed[static_cast<std::size_t>(r)] || lb[static_cast<std::size_t>(r)] > c) continue;
      int cand = detail::bfs_cycle_candidate(g, r, allowed, r, max_length, dist, parent, touched);
      if (cand > c) {
        // cand stays a valid lower bound until it exceeds the probe cap.
        lb[static_cast<std::size_t>(r)] = std::min(cand, max_length + 1);
        continue;
      }
      auto cyc = detail::canonical_cycle_at(g, r, c, allowed);
      if (!cyc) {  // cannot happen while the residual girth is >= c; stay safe
        lb[static_cast<std::size_t>(r)] = c + 1;
        continue;
      }
      for (int v : *cyc) {
        allowed[static_cast<std::size_t>(v)] = false;
        for (const auto& nb : g.neighbors(v)) allowed[static_cast<std::size_t>(nb.vertex)] = false;
      }
      out.cycles.push_back(std::move(*cyc));
    }
  }
  return out;
}

namespace {

// max(3, ceil(log2 d / log2 log2 d)); the ratio is far enough from integers
// that double rounding cannot flip the ceiling for any feasible degree.
int branching_parameter(int min_degree) {
  double ratio = std::log2(static_cast<double>(min_degree)) /
                 std::log2(std::log2(static_cast<double>(min_degree)));
  return std::max(3, static_cast<int>(std::ceil(ratio)));
}

// Proper coloring of one BFS level, written into an n-sized vector with -1
// off the level. DSATUR on level 1; elsewhere greedy along the reverse
// degeneracy order, which needs at most degeneracy+1 colors.
Coloring color_level(const Graph& g, const std::vector<int>& levels, int lvl, bool use_dsatur) {
  std::vector<int> verts;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (levels[static_cast<std::size_t>(v)] == lvl) verts.push_back(v);
  auto sub = induced_subgraph(g, verts);
  Coloring local;
  if (use_dsatur) {
    local = dsatur_coloring(sub.graph);
  } else {
    auto order = degeneracy_order(sub.graph).order;
    std::reverse(order.begin(), order.end());
    local = greedy_coloring(sub.graph, order);
  }
  Coloring full;
  full.colors.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  full.num_colors = local.num_colors;
  for (std::size_t i = 0; i < sub.original.size(); ++i)
    full.colors[static_cast<std::size_t>(sub.original[i])] = local.colors[i];
  return full;
}

}  // namespace

std::pair<Orientation, OrientationCertificate> short_orientation(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0 || g.min_degree() < 3)
    throw std::invalid_argument("short_orientation requires min degree >= 3");
  int delta = g.min_degree();

  OrientationCertificate cert;
  cert.k = branching_parameter(delta);
  cert.gamma_delta = ceil_log(delta - 1, n);
  cert.gamma_k = ceil_log(cert.k - 1, n);
  cert.collection = max_cycle_collection(g, 2 * cert.gamma_k);

  // Min degree >= 3 forces a cycle of length <= 2*gamma_k in every component
  // (radius-gamma_k balls outgrow n otherwise), so the collection reaches all
  // of them and the BFS below covers every vertex.
  auto member = cert.collection.membership(n);
  cert.levels.assign(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (member[static_cast<std::size_t>(v)] >= 0) {
      cert.levels[static_cast<std::size_t>(v)] = 0;
      queue.push_back(v);
    }
  int max_level = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(u))
      if (cert.levels[static_cast<std::size_t>(nb.vertex)] == -1) {
        cert.levels[static_cast<std::size_t>(nb.vertex)] =
            cert.levels[static_cast<std::size_t>(u)] + 1;
        max_level = std::max(max_level, cert.levels[static_cast<std::size_t>(nb.vertex)]);
        queue.push_back(nb.vertex);
      }
  }
  for (int v = 0; v < n; ++v)
    if (cert.levels[static_cast<std::size_t>(v)] == -1)
      throw std::logic_error("short_orientation: vertex unreached from the cycle collection");
  if (max_level > 1 + cert.gamma_delta)
    throw std::logic_error("short_orientation: level bound exceeded");

  for (int lvl = 1; lvl <= max_level; ++lvl) {
    cert.level_colorings.push_back(color_level(g, cert.levels, lvl, lvl == 1));
    if (lvl >= 2 && cert.level_colorings.back().num_colors > cert.k)
      throw std::logic_error("short_orientation: level subgraph needed more than k colors");
  }
  cert.chi_ub = max_level >= 1 ? cert.level_colorings[0].num_colors : 0;
  cert.certified_bound = cert.chi_ub + cert.k * cert.gamma_delta + 2 * cert.gamma_k;

  // Arc per edge: cycle edges follow their canonical sequence; edges between
  // levels point down (this covers edges entering the collection); edges
  // inside a level point from higher color to lower.
  std::vector<std::pair<int, int>> arcs(static_cast<std::size_t>(g.edge_count()), {-1, -1});
  for (const auto& cyc : cert.collection.cycles) {
    int len = static_cast<int>(cyc.size());
    for (int j = 0; j < len; ++j) {
      int a = cyc[static_cast<std::size_t>(j)];
      int b = cyc[static_cast<std::size_t>((j + 1) % len)];
      arcs[static_cast<std::size_t>(g.edge_index(a, b))] = {a, b};
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int lu = cert.levels[static_cast<std::size_t>(u)];
    int lv = cert.levels[static_cast<std::size_t>(v)];
    if (lu == 0 && lv == 0) {
      if (arcs[static_cast<std::size_t>(e)].first < 0)
        throw std::logic_error("short_orientation: edge between non-consecutive cycle vertices");
      continue;
    }
    if (lu != lv) {
      arcs[static_cast<std::size_t>(e)] = lu > lv ? std::pair(u, v) : std::pair(v, u);
      continue;
    }
    const auto& colors = cert.level_colorings[static_cast<std::size_t>(lu) - 1].colors;
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
      throw std::logic_error("short_orientation: improper level coloring");
    arcs[static_cast<std::size_t>(e)] =
        colors[static_cast<std::size_t>(u)] > colors[static_cast<std::size_t>(v)]
            ? std::pair(u, v)
            : std::pair(v, u);
  }
  return {Orientation::from_arcs(g, std::move(arcs)), std::move(cert)};
}

Orientation gallai_roy_orient(const Graph& g, const Coloring& c) {
  if (!is_proper_coloring(g, c))
    throw std::invalid_argument("gallai_roy_orient requires a proper coloring");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (auto [u, v] : g.edges())
    arcs.emplace_back(c.colors[static_cast<std::size_t>(u)] > c.colors[static_cast<std::size_t>(v)]
                          ? std::pair(u, v)
                          : std::pair(v, u));
  return Orientation::from_arcs(g, std::move(arcs));
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.passed ? "ok   " : "FAIL ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

namespace {

struct CheckRecorder {
  VerificationReport& report;

  void record(const std::string& name, bool passed, const std::string& detail) {
    report.checks.push_back({name, passed, passed ? "" : detail});
  }
};

}  // namespace

VerificationReport verify_orientation(const Graph& g, const Orientation& o,
                                      const OrientationCertificate& cert) {
  VerificationReport report;
  CheckRecorder rec{report};
  int n = g.vertex_count();

  bool arcs_ok = o.matches(g);
  rec.record("arcs-match-edges", arcs_ok, "arcs are not a per-edge reorientation of the graph");
  if (!arcs_ok) return report;  // nothing below is meaningful

  {
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    for (const auto& [t, h] : o.arcs) ++outdeg[static_cast<std::size_t>(t)];
    int sink = -1;
    for (int v = 0; v < n && sink < 0; ++v)
      if (outdeg[static_cast<std::size_t>(v)] == 0) sink = v;
    rec.record("positive-out-degree", sink < 0, "vertex " + std::to_string(sink) + " is a sink");
  }

  auto member = cert.collection.membership(n);

  {
    bool ok = true;
    std::string why;
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cert.collection.cycles.size() && ok; ++i) {
      const auto& cyc = cert.collection.cycles[i];
      int len = static_cast<int>(cyc.size());
      if (len < 3 || len > cert.collection.length_bound) {
        ok = false;
        why = "cycle " + std::to_string(i) + " has length " + std::to_string(len);
        break;
      }
      for (int j = 0; j < len && ok; ++j) {
        int a = cyc[static_cast<std::size_t>(j)];
        int b = cyc[static_cast<std::size_t>((j + 1) % len)];
        if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)] >= 0) {
          ok = false;
          why = "cycle " + std::to_string(i) + " repeats or misuses vertex " + std::to_string(a);
        } else if (g.edge_index(a, b) < 0) {
          ok = false;
          why = "cycle " + std::to_string(i) + " uses non-edge (" + std::to_string(a) + "," +
                std::to_string(b) + ")";
        } else {
          seen[static_cast<std::size_t>(a)] = static_cast<int>(i);
        }
      }
      // Induced and nonadjacent: off-cycle edges at cycle vertices must not
      // reach this or any other cycle.
      for (int j = 0; j < len && ok; ++j) {
        int a = cyc[static_cast<std::size_t>(j)];
        int prev = cyc[static_cast<std::size_t>((j + len - 1) % len)];
        int next = cyc[static_cast<std::size_t>((j + 1) % len)];
        for (const auto& nb : g.neighbors(a)) {
          if (nb.vertex == prev || nb.vertex == next) continue;
          if (member[static_cast<std::size_t>(nb.vertex)] >= 0) {
            ok = false;
            why = "edge (" + std::to_string(a) + "," + std::to_string(nb.vertex) +
                  ") joins collection vertices";
            break;
          }
        }
      }
    }
    rec.record("collection-cycles", ok, why);
  }

  {
    // Maximality: no leftover cycle of length <= length_bound among vertices
    // neither in nor adjacent to the collection.
    std::vector<bool> residual(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v)
      if (member[static_cast<std::size_t>(v)] >= 0) {
        residual[static_cast<std::size_t>(v)] = false;
        for (const auto& nb : g.neighbors(v)) residual[static_cast<std::size_t>(nb.vertex)] = false;
      }
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
        touched;
    int shortest = INT_MAX;
    for (int r = 0; r < n && shortest > cert.collection.length_bound; ++r)
      if (residual[static_cast<std::size_t>(r)])
        shortest = std::min(shortest, detail::bfs_cycle_candidate(g, r, residual, 0,
                                                                  cert.collection.length_bound,
                                                                  dist, parent, touched));
    rec.record("collection-maximal", shortest > cert.collection.length_bound,
               "residual still has a cycle of length " + std::to_string(shortest));
  }

  {
    bool ok = true;
    std::string why;
    if (n == 0 || g.min_degree() < 3) {
      ok = false;
      why = "graph min degree below 3";
    } else {
      int delta = g.min_degree();
      if (cert.k != branching_parameter(delta)) {
        ok = false;
        why = "k mismatch";
      } else if (cert.gamma_delta != ceil_log(delta - 1, n) ||
                 cert.gamma_k != ceil_log(cert.k - 1, n)) {
        ok = false;
        why = "gamma mismatch";
      } else if (cert.collection.length_bound != 2 * cert.gamma_k) {
        ok = false;
        why = "collection length bound is not 2*gamma_k";
      } else if (cert.certified_bound !=
                 cert.chi_ub + cert.k * cert.gamma_delta + 2 * cert.gamma_k) {
        ok = false;
        why = "certified_bound does not match its formula";
      }
    }
    rec.record("parameters", ok, why);
  }

  int max_level = 0;
  {
    bool ok = static_cast<int>(cert.levels.size()) == n;
    std::string why = ok ? "" : "level map size mismatch";
    for (int v = 0; ok && v < n; ++v) {
      int lv = cert.levels[static_cast<std::size_t>(v)];
      max_level = std::max(max_level, lv);
      if ((lv == 0) != (member[static_cast<std::size_t>(v)] >= 0)) {
        ok = false;
        why = "vertex " + std::to_string(v) + " level-0 status disagrees with the collection";
      } else if (lv < 0 || lv > 1 + cert.gamma_delta) {
        ok = false;
        why = "vertex " + std::to_string(v) + " has level " + std::to_string(lv);
      }
    }
    for (int v = 0; ok && v < n; ++v) {
      int lv = cert.levels[static_cast<std::size_t>(v)];
      bool has_parent_level = lv == 0;
      for (const auto& nb : g.neighbors(v)) {
        int lw = cert.levels[static_cast<std::size_t>(nb.vertex)];
        if (lw == lv - 1) has_parent_level = true;
        if (std::abs(lw - lv) > 1) {
          ok = false;
          why = "edge (" + std::to_string(v) + "," + std::to_string(nb.vertex) +
                ") skips a level";
          break;
        }
      }
      if (ok && !has_parent_level) {
        ok = false;
        why = "vertex " + std::to_string(v) + " has no neighbor one level down";
      }
    }
    rec.record("levels-bfs", ok, why);
  }

  {
    bool ok = static_cast<int>(cert.level_colorings.size()) == max_level;
    std::string why = ok ? "" : "expected one coloring per level 1..max";
    for (int lvl = 1; ok && lvl <= max_level; ++lvl) {
      const auto& col = cert.level_colorings[static_cast<std::size_t>(lvl) - 1];
      if (static_cast<int>(col.colors.size()) != n) {
        ok = false;
        why = "level " + std::to_string(lvl) + " coloring size mismatch";
        break;
      }
      for (int v = 0; v < n; ++v) {
        int cv = col.colors[static_cast<std::size_t>(v)];
        bool on_level = cert.levels[static_cast<std::size_t>(v)] == lvl;
        if (on_level != (cv >= 0) || cv >= col.num_colors) {
          ok = false;
          why = "level " + std::to_string(lvl) + " color entry for vertex " + std::to_string(v);
          break;
        }
      }
      for (auto [u, v] : g.edges()) {
        if (cert.levels[static_cast<std::size_t>(u)] == lvl &&
            cert.levels[static_cast<std::size_t>(v)] == lvl &&
            col.colors[static_cast<std::size_t>(u)] == col.colors[static_cast<std::size_t>(v)]) {
          ok = false;
          why = "level " + std::to_string(lvl) + " coloring is improper";
          break;
        }
      }
      if (ok && lvl == 1 && col.num_colors != cert.chi_ub) {
        ok = false;
        why = "chi_ub differs from the level-1 color count";
      }
      if (ok && lvl >= 2 && col.num_colors > cert.k) {
        ok = false;
        why = "level " + std::to_string(lvl) + " uses more than k colors";
      }
    }
    rec.record("level-colorings", ok, why);
  }

  {
    // Cycle arcs must follow their sequences; everything else points to a
    // lower level or a lower color.
    std::vector<char> cycle_arc(static_cast<std::size_t>(g.edge_count()), 0);
    bool ok = true;
    std::string why;
    for (const auto& cyc : cert.collection.cycles) {
      int len = static_cast<int>(cyc.size());
      for (int j = 0; j < len; ++j) {
        int a = cyc[static_cast<std::size_t>(j)];
        int b = cyc[static_cast<std::size_t>((j + 1) % len)];
        int e = g.edge_index(a, b);
        if (e < 0) continue;  // already reported by collection-cycles
        cycle_arc[static_cast<std::size_t>(e)] = 1;
        if (o.arcs[static_cast<std::size_t>(e)] != std::pair(a, b)) {
          ok = false;
          why = "cycle edge (" + std::to_string(a) + "," + std::to_string(b) +
                ") not oriented along its cycle";
        }
      }
    }
    for (int e = 0; ok && e < g.edge_count(); ++e) {
      if (cycle_arc[static_cast<std::size_t>(e)]) continue;
      auto [t, h] = o.arcs[static_cast<std::size_t>(e)];
      int lt = cert.levels.empty() ? 0 : cert.levels[static_cast<std::size_t>(t)];
      int lh = cert.levels.empty() ? 0 : cert.levels[static_cast<std::size_t>(h)];
      if (lt == 0 && lh == 0) {
        ok = false;
        why = "non-cycle edge inside the collection: (" + std::to_string(t) + "," +
              std::to_string(h) + ")";
      } else if (lt != lh) {
        if (lt < lh) {
          ok = false;
          why = "arc (" + std::to_string(t) + "," + std::to_string(h) + ") points up a level";
        }
      } else {
        const auto& col = cert.level_colorings[static_cast<std::size_t>(lt) - 1].colors;
        if (col[static_cast<std::size_t>(t)] <= col[static_cast<std::size_t>(h)]) {
          ok = false;
          why = "arc (" + std::to_string(t) + "," + std::to_string(h) +
                ") does not descend in color";
        }
      }
    }
    rec.record("arc-rules", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    std::vector<char> cycle_arc(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& cyc : cert.collection.cycles) {
      int len = static_cast<int>(cyc.size());
      for (int j = 0; j < len; ++j) {
        int e = g.edge_index(cyc[static_cast<std::size_t>(j)],
                             cyc[static_cast<std::size_t>((j + 1) % len)]);
        if (e >= 0) cycle_arc[static_cast<std::size_t>(e)] = 1;
      }
    }
    for (std::size_t e = 0; e < o.arcs.size(); ++e) {
      if (member[static_cast<std::size_t>(o.arcs[e].first)] >= 0 && !cycle_arc[e]) {
        ok = false;
        why = "arc " + std::to_string(e) + " leaves collection vertex " +
              std::to_string(o.arcs[e].first);
        break;
      }
    }
    rec.record("no-arc-leaves-collection", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    try {
      int l = longest_directed_path_structured(g, o, cert);
      if (l > cert.certified_bound) {
        ok = false;
        why = "longest directed path " + std::to_string(l) + " exceeds certified bound " +
              std::to_string(cert.certified_bound);
      }
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    rec.record("path-bound", ok, why);
  }

  return report;
}

int longest_directed_path_exact(const Graph& g, const Orientation& o) {
  int n = g.vertex_count();
  if (n > 48) throw std::invalid_argument("longest_directed_path_exact is guarded to n <= 48");
  if (!o.matches(g))
    throw std::invalid_argument("longest_directed_path_exact: orientation mismatch");
  auto out = o.out_adjacency();

  // reach[v]: bitset of vertices reachable from v, v included; iterate the
  // one-step closure to a fixpoint (cycles make a topological pass unusable).
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) reach[static_cast<std::size_t>(v)] = 1ULL << v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint64_t acc = reach[static_cast<std::size_t>(v)];
      for (const auto& nb : out[static_cast<std::size_t>(v)])
        acc |= reach[static_cast<std::size_t>(nb.vertex)];
      if (acc != reach[static_cast<std::size_t>(v)]) {
        reach[static_cast<std::size_t>(v)] = acc;
        changed = true;
      }
    }
  }

  int best = 0;
  std::function<void(int, std::uint64_t, int)> dfs = [&](int v, std::uint64_t visited, int len) {
    best = std::max(best, len);
    for (const auto& nb : out[static_cast<std::size_t>(v)]) {
      if (visited >> nb.vertex & 1) continue;
      // Everything the extended path can still visit lies in reach[next].
      int upper = len + __builtin_popcountll(reach[static_cast<std::size_t>(nb.vertex)] & ~visited);
      if (upper <= best) continue;
      dfs(nb.vertex, visited | (1ULL << nb.vertex), len + 1);
    }
  };
  for (int v = 0; v < n; ++v) {
    if (__builtin_popcountll(reach[static_cast<std::size_t>(v)]) - 1 <= best) continue;
    dfs(v, 1ULL << v, 0);
  }
  return best;
}

int longest_directed_path_structured(const Graph& g, const Orientation& o,
                                     const OrientationCertificate& cert) {
  int n = g.vertex_count();
  if (!o.matches(g))
    throw std::invalid_argument("longest_directed_path_structured: orientation mismatch");

  std::vector<int> cycle_len_at(static_cast<std::size_t>(n), 0);
  std::vector<char> cycle_arc(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& cyc : cert.collection.cycles) {
    int len = static_cast<int>(cyc.size());
    for (int j = 0; j < len; ++j) {
      int a = cyc[static_cast<std::size_t>(j)];
      int b = cyc[static_cast<std::size_t>((j + 1) % len)];
      if (a < 0 || a >= n || cycle_len_at[static_cast<std::size_t>(a)] != 0)
        throw std::invalid_argument("certificate cycles overlap or leave the graph");
      int e = g.edge_index(a, b);
      if (e < 0 || o.arcs[static_cast<std::size_t>(e)] != std::pair(a, b))
        throw std::invalid_argument("certificate cycle not oriented along the orientation");
      cycle_arc[static_cast<std::size_t>(e)] = 1;
    }
    for (int v : cyc) cycle_len_at[static_cast<std::size_t>(v)] = len;
  }
  for (std::size_t e = 0; e < o.arcs.size(); ++e)
    if (cycle_len_at[static_cast<std::size_t>(o.arcs[e].first)] != 0 && !cycle_arc[e])
      throw std::invalid_argument("an arc leaves a collection cycle");

  // Kahn's algorithm over the non-cycle arcs; f[v] = longest such path ending
  // at v. Entering a cycle of length c buys c-1 further edges, never more,
  // because cycle vertices have no other out-arcs.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0), f(static_cast<std::size_t>(n), 0);
  auto out = o.out_adjacency();
  for (std::size_t e = 0; e < o.arcs.size(); ++e)
    if (!cycle_arc[e]) ++indeg[static_cast<std::size_t>(o.arcs[e].second)];
  std::deque<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int processed = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    ++processed;
    for (const auto& nb : out[static_cast<std::size_t>(v)]) {
      if (cycle_arc[static_cast<std::size_t>(nb.edge)]) continue;
      f[static_cast<std::size_t>(nb.vertex)] =
          std::max(f[static_cast<std::size_t>(nb.vertex)], f[static_cast<std::size_t>(v)] + 1);
      if (--indeg[static_cast<std::size_t>(nb.vertex)] == 0) ready.push_back(nb.vertex);
    }
  }
  if (processed != n)
    throw std::logic_error("longest_directed_path_structured: non-cycle arcs are not acyclic");

  int best = 0;
  for (int v = 0; v < n; ++v)
    best = std::max(best, f[static_cast<std::size_t>(v)] +
                              std::max(0, cycle_len_at[static_cast<std::size_t>(v)] - 1));
  return best;
}

std::string OrientationCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["gamma_delta"] = gamma_delta;
  j["gamma_k"] = gamma_k;
  j["chi_ub"] = chi_ub;
  j["certified_bound"] = certified_bound;
  j["length_bound"] = collection.length_bound;
  j["cycles"] = collection.cycles;
  j["levels"] = levels;
  j["level_colorings"] = nlohmann::ordered_json::array();
  for (const auto& col : level_colorings)
    j["level_colorings"].push_back({{"num_colors", col.num_colors}, {"colors", col.colors}});
  return j.dump();
}

OrientationCertificate OrientationCertificate::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    OrientationCertificate cert;
    cert.k = j.at("k").get<int>();
    cert.gamma_delta = j.at("gamma_delta").get<int>();
    cert.gamma_k = j.at("gamma_k").get<int>();
    cert.chi_ub = j.at("chi_ub").get<int>();
    cert.certified_bound = j.at("certified_bound").get<int>();
    cert.collection.length_bound = j.at("length_bound").get<int>();
    cert.collection.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
    cert.levels = j.at("levels").get<std::vector<int>>();
    for (const auto& col : j.at("level_colorings")) {
      Coloring c;
      c.num_colors = col.at("num_colors").get<int>();
      c.colors = col.at("colors").get<std::vector<int>>();
      cert.level_colorings.push_back(std::move(c));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace cg
