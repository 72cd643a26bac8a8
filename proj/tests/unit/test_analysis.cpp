#include <algorithm>
#include <set>

#include "cg/analysis.hpp"
#include "cg/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "naive.hpp"

using cg::Graph;
using cg::Rational;

TEST_CASE("ceil_log") {
  CHECK(cg::ceil_log(2, 1) == 0);
  CHECK(cg::ceil_log(2, 2) == 1);
  CHECK(cg::ceil_log(2, 4) == 2);
  CHECK(cg::ceil_log(2, 5) == 3);
  CHECK(cg::ceil_log(3, 8000) == 9);   // 3^8 = 6561 < 8000 <= 3^9
  CHECK(cg::ceil_log(4, 64) == 3);
  CHECK(cg::ceil_log(10, 1000000) == 6);
}

TEST_CASE("girth on known graphs") {
  CHECK(cg::girth(fixtures::petersen()) == 5);
  CHECK(cg::girth(cg::complete_graph(4)) == 3);
  CHECK(cg::girth(cg::cycle_graph(8)) == 8);
  CHECK(!cg::girth(fixtures::path_graph(6)).has_value());
  CHECK(!cg::girth(cg::complete_ary_tree(3, 3)).has_value());
}

TEST_CASE("girth restricted by a vertex mask") {
  Graph p = fixtures::petersen();
  std::vector<bool> outer(10, false);
  for (int i = 0; i < 5; ++i) outer[i] = true;
  CHECK(cg::girth(p, outer) == 5);
  std::vector<bool> no_zero(10, true);
  no_zero[0] = false;
  CHECK(cg::girth(p, no_zero) == 5);  // Petersen minus a vertex still has 5-cycles
}

TEST_CASE("shortest_cycle returns a valid induced cycle of girth length") {
  Graph p = fixtures::petersen();
  auto cyc = cg::shortest_cycle(p);
  REQUIRE(cyc.has_value());
  REQUIRE(cyc->size() == 5);
  std::set<int> distinct(cyc->begin(), cyc->end());
  CHECK(distinct.size() == 5);
  for (std::size_t i = 0; i < cyc->size(); ++i) {
    int a = (*cyc)[i], b = (*cyc)[(i + 1) % cyc->size()];
    CHECK(p.edge_index(a, b) >= 0);
  }
  CHECK(!cg::shortest_cycle(fixtures::path_graph(5)).has_value());
}

TEST_CASE("self-colliding path on K4 is the frozen triangle") {
  Graph k4 = cg::complete_graph(4);
  auto p = cg::self_colliding_path(k4, 0, 1, 3);
  CHECK(p.vertices == std::vector<int>{0, 1, 2});
  CHECK(p.collision_index == 1);  // vertex 2 closes back to vertex 0
  CHECK(p.tail_length() == 0);
  CHECK(p.body_length() == 3);
}

TEST_CASE("self-colliding paths stay short on random cubic graphs") {
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = cg::random_regular(30, 3, seed);
    int gamma = cg::ceil_log(2, 30);
    for (const auto& nb : g.neighbors(0)) {
      auto p = cg::self_colliding_path(g, 0, nb.vertex, 3);
      REQUIRE(p.vertices.size() >= 2);
      CHECK(p.vertices[0] == 0);
      CHECK(p.vertices[1] == nb.vertex);
      CHECK(p.length() <= 2 * gamma);
      std::set<int> distinct(p.vertices.begin(), p.vertices.end());
      CHECK(distinct.size() == p.vertices.size());
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        CHECK(g.edge_index(p.vertices[i], p.vertices[i + 1]) >= 0);
      REQUIRE(p.collision_index >= 1);
      REQUIRE(p.collision_index <= static_cast<int>(p.vertices.size()) - 2);
      CHECK(g.edge_index(p.vertices.back(), p.vertices[p.collision_index - 1]) >= 0);
    }
  }
}

TEST_CASE("isoperimetric profile matches the all-subsets oracle") {
  struct Case {
    Graph g;
    int kmax;
  };
  std::vector<Case> cases;
  cases.push_back({fixtures::petersen(), 5});
  cases.push_back({cg::complete_graph(6), 3});
  cases.push_back({cg::cycle_graph(8), 4});
  cases.push_back({fixtures::path_graph(7), 3});
  cases.push_back({cg::random_regular(12, 3, 5), 6});
  for (const auto& c : cases) {
    auto prof = cg::isoperimetric_profile(c.g, c.kmax);
    REQUIRE(prof.kmax() == c.kmax);
    for (int k = 1; k <= c.kmax; ++k) CHECK(prof.at(k) == naive::isoperimetric_value(c.g, k));
  }
}

TEST_CASE("isoperimetric profile frozen values") {
  auto k4 = cg::isoperimetric_profile(cg::complete_graph(4), 2);
  CHECK(k4.at(1) == Rational(3, 1));
  CHECK(k4.at(2) == Rational(2, 1));
  auto k5 = cg::isoperimetric_profile(cg::complete_graph(5), 2);
  CHECK(k5.at(2) == Rational(3, 1));
  auto c8 = cg::isoperimetric_profile(cg::cycle_graph(8), 4);
  for (int k = 1; k <= 4; ++k) CHECK(c8.at(k) == Rational(2, k));
  // complete graphs: boundary of any k-set is k(n-k), so the profile is n-k
  for (int n = 4; n <= 10; ++n) {
    auto prof = cg::isoperimetric_profile(cg::complete_graph(n), n / 2);
    for (int k = 1; k <= n / 2; ++k) CHECK(prof.at(k) == Rational(n - k, 1));
  }
}

TEST_CASE("isoperimetric profile argument guards") {
  CHECK_THROWS(cg::isoperimetric_profile(cg::complete_graph(6), 4));  // kmax > n/2
  CHECK_THROWS(cg::isoperimetric_profile(cg::complete_graph(6), 0));
}

TEST_CASE("degeneracy orders") {
  CHECK(cg::degeneracy_order(fixtures::petersen()).degeneracy == 3);
  CHECK(cg::degeneracy_order(cg::complete_graph(5)).degeneracy == 4);
  CHECK(cg::degeneracy_order(fixtures::path_graph(6)).degeneracy == 1);
  CHECK(cg::degeneracy_order(cg::cycle_graph(8)).degeneracy == 2);
  auto ord = cg::degeneracy_order(fixtures::petersen()).order;
  std::set<int> everyone(ord.begin(), ord.end());
  CHECK(everyone.size() == 10);
}

TEST_CASE("greedy coloring along reversed degeneracy order stays within degeneracy+1") {
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    Graph g = cg::random_regular(24, 4, seed);
    auto dg = cg::degeneracy_order(g);
    std::vector<int> rev(dg.order.rbegin(), dg.order.rend());
    auto col = cg::greedy_coloring(g, rev);
    CHECK(cg::is_proper_coloring(g, col));
    CHECK(col.num_colors <= dg.degeneracy + 1);
  }
}

TEST_CASE("dsatur and exact chromatic numbers") {
  Graph p = fixtures::petersen();
  auto col = cg::dsatur_coloring(p);
  CHECK(cg::is_proper_coloring(p, col));
  CHECK(col.num_colors >= 3);
  CHECK(cg::exact_chromatic_number(p) == 3);
  CHECK(cg::exact_chromatic_number(cg::complete_graph(4)) == 4);
  CHECK(cg::exact_chromatic_number(cg::cycle_graph(5)) == 3);
  CHECK(cg::exact_chromatic_number(cg::cycle_graph(6)) == 2);
  auto k5 = cg::dsatur_coloring(cg::complete_graph(5));
  CHECK(k5.num_colors == 5);
}

TEST_CASE("improper colorings are rejected") {
  Graph tri = cg::complete_graph(3);
  cg::Coloring c;
  c.colors = {0, 0, 1};
  c.num_colors = 2;
  CHECK(!cg::is_proper_coloring(tri, c));
}

TEST_CASE("induced subgraphs keep the vertex mapping") {
  Graph p = fixtures::petersen();
  auto sub = cg::induced_subgraph(p, {0, 1, 2, 5, 6, 7});
  CHECK(sub.graph.vertex_count() == 6);
  for (const auto& [u, v] : sub.graph.edges())
    CHECK(p.edge_index(sub.original[u], sub.original[v]) >= 0);
  int expected = 0;
  std::set<int> inside{0, 1, 2, 5, 6, 7};
  for (const auto& [u, v] : p.edges())
    if (inside.count(u) && inside.count(v)) ++expected;
  CHECK(sub.graph.edge_count() == expected);
}
