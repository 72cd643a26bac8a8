#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cg/analysis.hpp"
#include "cg/game.hpp"
#include "cg/graph.hpp"
#include "cg/harness.hpp"
#include "cg/orientation.hpp"
#include "cg/strategy.hpp"
#include "cg/transcript.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "sabotage.hpp"

using cg::GameConfig;
using cg::GameState;
using cg::Graph;
using cg::Player;

TEST_CASE("strategy names parse and round-trip") {
  auto tree = cg::strategy_from_name("tree", Player::Maker, 0);
  CHECK(tree->name() == "tree[root=0]");
  CHECK(tree->side() == Player::Maker);
  CHECK(cg::strategy_from_name("tree[root=3]", Player::Maker, 0)->name() == "tree[root=3]");
  CHECK(cg::strategy_from_name("random", Player::Maker, 7)->name() == "random[seed=7]");
  CHECK(cg::strategy_from_name("random[seed=12]", Player::Breaker, 7)->name() == "random[seed=12]");
  CHECK(cg::strategy_from_name("greedy-merge", Player::Maker, 0)->name() == "greedy-merge");
  CHECK(cg::strategy_from_name("reactive", Player::Breaker, 0)->name() == "reactive");
  CHECK(cg::strategy_from_name("counter-tree", Player::Breaker, 0)->name() == "counter-tree");

  CHECK_THROWS_AS(cg::strategy_from_name("tree", Player::Breaker, 0), std::invalid_argument);
  CHECK_THROWS_AS(cg::strategy_from_name("reactive", Player::Maker, 0), std::invalid_argument);
  CHECK_THROWS_AS(cg::strategy_from_name("castle", Player::Maker, 0), std::invalid_argument);
  CHECK_THROWS_AS(cg::strategy_from_name("global", Player::Breaker, 0), std::invalid_argument);  // no orientation
}

TEST_CASE("global breaker names carry the orientation hash") {
  Graph g = cg::random_regular(20, 4, 1);
  auto [o, cert] = cg::short_orientation(g);
  (void)cert;
  std::string hash = cg::orientation_hash_hex(o);
  CHECK(hash.size() == 16);
  auto global = cg::strategy_from_name("global", Player::Breaker, 0, &o);
  CHECK(global->name() == "global[orient=" + hash + "]");
  CHECK(cg::strategy_from_name("global[orient=" + hash + "]", Player::Breaker, 0, &o)->name() ==
        global->name());
  CHECK_THROWS_AS(cg::strategy_from_name("global[orient=0000000000000000]", Player::Breaker, 0, &o),
                  std::invalid_argument);

  auto flipped = o;
  std::swap(flipped.arcs[0].first, flipped.arcs[0].second);
  CHECK(cg::orientation_hash_hex(flipped) != hash);
}

TEST_CASE("tree maker grows from its root in edge order") {
  Graph p6 = fixtures::path_graph(6);
  GameConfig cfg;
  GameState st(p6, cfg);
  auto maker = cg::maker_tree_strategy(0);
  sabotage::PassBreaker pass;
  auto outcome = cg::play(st, *maker, pass);
  CHECK(outcome.max_component == 6);
  CHECK(!outcome.forfeited);
  std::vector<int> claimed;
  for (const auto& rec : st.history())
    if (rec.player == Player::Maker) claimed.push_back(rec.edge);
  CHECK(claimed == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("tree maker forfeits once its frontier is gone") {
  Graph star = cg::complete_ary_tree(3, 2);  // center 0, leaves 1..3
  GameConfig cfg;
  cfg.first = Player::Breaker;
  GameState st(star, cfg);
  auto maker = cg::maker_tree_strategy(1);
  auto breaker = cg::breaker_reactive_greedy();
  auto outcome = cg::play(st, *maker, *breaker);
  CHECK(outcome.forfeited);
  CHECK(outcome.max_component == 1);
  CHECK(outcome.rounds == 1);
}

TEST_CASE("tree maker rejects an out-of-range root") {
  Graph p = fixtures::path_graph(4);
  GameConfig cfg;
  GameState st(p, cfg);
  auto maker = cg::maker_tree_strategy(99);
  CHECK_THROWS_AS(maker->choose_step(st), std::invalid_argument);
}

TEST_CASE("greedy-merge prefers joining the two largest components") {
  Graph g = Graph::from_edges(
      11, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {2, 3}, {5, 6}, {7, 8}, {8, 9}, {9, 10}, {7, 10}});
  GameConfig cfg;
  GameState st(g, cfg);
  // Hand-play two maker components {0,1,2} and {3,4,5}; the breaker eats junk.
  st.apply_step(Player::Maker, 0);
  st.apply_step(Player::Breaker, 6);
  st.apply_step(Player::Maker, 1);
  st.apply_step(Player::Breaker, 7);
  st.apply_step(Player::Maker, 2);
  st.apply_step(Player::Breaker, 8);
  st.apply_step(Player::Maker, 3);
  st.apply_step(Player::Breaker, 9);
  auto maker = cg::maker_greedy_merge();
  auto pick = maker->choose_step(st);
  REQUIRE(pick.has_value());
  CHECK(*pick == 4);  // the 3+3 bridge beats the 3+1 extension at edge 5
}

TEST_CASE("random strategies are seed-deterministic") {
  Graph g = cg::random_regular(20, 4, 2);
  auto run = [&](std::uint64_t seed) {
    GameConfig cfg;
    cfg.b = 2;
    GameState st(g, cfg);
    auto maker = cg::maker_random(seed);
    auto breaker = cg::breaker_random(seed + 1);
    auto outcome = cg::play(st, *maker, *breaker);
    std::vector<int> edges;
    for (const auto& rec : st.history()) edges.push_back(rec.edge);
    return std::pair(outcome.max_component, edges);
  };
  auto a = run(5), b = run(5), c = run(6);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(cg::maker_random(5)->name() == "random[seed=5]");
}

TEST_CASE("reactive breaker with b >= 2d-2 pins every maker edge") {
  Graph k4 = cg::complete_graph(4);
  for (int trial = 0; trial < 3; ++trial) {
    GameConfig cfg;
    cfg.b = 4;  // 2*3 - 2
    GameState st(k4, cfg);
    auto maker = trial == 0 ? cg::maker_tree_strategy(0)
                            : trial == 1 ? cg::maker_greedy_merge()
                                         : cg::maker_random(trial);
    auto breaker = cg::breaker_reactive_greedy();
    auto outcome = cg::play(st, *maker, *breaker);
    CHECK(outcome.max_component == 2);
  }
}

TEST_CASE("path families cover the source neighborhood and stay small") {
  for (std::uint64_t seed : {3, 4}) {
    Graph g = cg::random_regular(60, 3, seed);
    auto fam = cg::build_path_family(g, 5);
    CHECK(fam.source == 5);
    CHECK(fam.paths.size() == 3);
    int gamma = cg::ceil_log(2, 60);
    CHECK(static_cast<int>(fam.edges.size()) <= 2 * 3 * gamma);
    for (const auto& p : fam.paths) {
      CHECK(p.vertices[0] == 5);
      CHECK(fam.edges.count(g.edge_index(p.vertices[0], p.vertices[1])) == 1);
      CHECK(fam.edges.count(g.edge_index(p.vertices.back(), p.vertices[p.collision_index - 1])) == 1);
    }
  }
  CHECK_THROWS_AS(cg::build_path_family(fixtures::path_graph(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(cg::build_path_family(cg::complete_graph(4), 9), std::invalid_argument);
}

TEST_CASE("counter-tree traps the tree maker inside its path family") {
  Graph g = cg::random_regular(50, 3, 8);
  GameConfig cfg;
  GameState st(g, cfg);
  auto maker = cg::maker_tree_strategy(0);
  auto breaker = cg::breaker_counter_tree();
  auto outcome = cg::play(st, *maker, *breaker);
  CHECK(outcome.forfeited);
  CHECK(!breaker->deviated());
  CHECK(outcome.max_component <= 2 * 3 * cg::ceil_log(2, 50));

  int first_maker_edge = -1;
  for (const auto& rec : st.history())
    if (rec.player == Player::Maker) {
      first_maker_edge = rec.edge;
      break;
    }
  REQUIRE(first_maker_edge >= 0);
  auto [a, b] = g.edge(first_maker_edge);
  auto fam = cg::build_path_family(g, std::min(a, b));
  for (const auto& rec : st.history())
    if (rec.player == Player::Maker) CHECK(fam.edges.count(rec.edge) == 1);
}

TEST_CASE("counter-tree flags deviation or keeps the maker inside P") {
  Graph g = cg::random_regular(40, 3, 12);
  GameConfig cfg;
  GameState st(g, cfg);
  auto maker = cg::maker_random(99);
  auto breaker = cg::breaker_counter_tree();
  cg::play(st, *maker, *breaker);

  int first_maker_edge = -1;
  for (const auto& rec : st.history())
    if (rec.player == Player::Maker) {
      first_maker_edge = rec.edge;
      break;
    }
  REQUIRE(first_maker_edge >= 0);
  auto [a, b] = g.edge(first_maker_edge);
  auto fam = cg::build_path_family(g, std::min(a, b));
  if (!breaker->deviated()) {
    for (const auto& rec : st.history())
      if (rec.player == Player::Maker) CHECK(fam.edges.count(rec.edge) == 1);
  }
}

TEST_CASE("global breaker refuses a mismatched game") {
  Graph g = cg::random_regular(20, 4, 3);
  auto [o, cert] = cg::short_orientation(g);
  (void)cert;
  auto breaker = cg::breaker_global(o);
  GameConfig cfg;
  cfg.b = 2;
  GameState plain(g, cfg);
  plain.apply_step(Player::Maker, 0);
  CHECK_THROWS_AS(breaker->choose_step(plain), std::logic_error);
}
