#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cg/game.hpp"
#include "cg/graph.hpp"
#include "cg/monitor.hpp"
#include "cg/orientation.hpp"
#include "cg/strategy.hpp"
#include "cg/transcript.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "sabotage.hpp"

using cg::GameConfig;
using cg::GameState;
using cg::Graph;
using cg::MonitorViolation;
using cg::Player;

namespace {

std::unique_ptr<cg::Strategy> make_maker(int which, std::uint64_t seed) {
  switch (which) {
    case 0: return cg::maker_tree_strategy(0);
    case 1: return cg::maker_random(seed);
    default: return cg::maker_greedy_merge();
  }
}

}  // namespace

TEST_CASE("free-edge budget stays silent against the reactive breaker") {
  for (int b : {2, 3, 4}) {
    for (int which : {0, 1, 2}) {
      Graph g = cg::random_regular(40, 4, static_cast<std::uint64_t>(10 + b));
      GameConfig cfg;
      cfg.b = b;
      GameState st(g, cfg);
      auto maker = make_maker(which, 77);
      auto breaker = cg::breaker_reactive_greedy();
      auto monitor = cg::free_edge_budget_monitor(4, b);
      std::vector<cg::Monitor*> monitors{monitor.get()};
      CHECK_NOTHROW(cg::play(st, *maker, *breaker, monitors));
    }
  }
}

TEST_CASE("structural monitors stay silent against the orientation breaker") {
  for (std::uint64_t seed : {1, 2}) {
    Graph g = cg::random_regular(40, 4, seed);
    auto [o, cert] = cg::short_orientation(g);
    (void)cert;
    for (int which : {0, 1, 2}) {
      GameConfig cfg;
      cfg.b = 2;
      GameState st(g, cfg, o);
      auto maker = make_maker(which, seed);
      auto breaker = cg::breaker_global(o);
      auto tree_mon = cg::directed_tree_monitor();
      auto height_mon = cg::out_arc_height_monitor();
      auto width_mon = cg::width_monitor(4);
      std::vector<cg::Monitor*> monitors{tree_mon.get(), height_mon.get(), width_mon.get()};
      CHECK_NOTHROW(cg::play(st, *maker, *breaker, monitors));
    }
  }
}

TEST_CASE("a passive breaker trips the free-edge budget") {
  Graph g = cg::random_regular(40, 4, 5);
  GameConfig cfg;
  cfg.b = 2;
  GameState st(g, cfg);
  auto maker = cg::maker_tree_strategy(0);
  sabotage::PassBreaker pass;
  auto monitor = cg::free_edge_budget_monitor(4, 2);
  std::vector<cg::Monitor*> monitors{monitor.get()};
  CHECK_THROWS_AS(cg::play(st, *maker, pass, monitors), MonitorViolation);
}

TEST_CASE("violation messages carry the monitor name and a component dump") {
  Graph g = cg::random_regular(40, 4, 5);
  GameConfig cfg;
  cfg.b = 2;
  GameState st(g, cfg);
  auto maker = cg::maker_tree_strategy(0);
  sabotage::PassBreaker pass;
  auto monitor = cg::free_edge_budget_monitor(4, 2);
  std::vector<cg::Monitor*> monitors{monitor.get()};
  try {
    cg::play(st, *maker, pass, monitors);
    FAIL("expected a violation");
  } catch (const MonitorViolation& v) {
    std::string msg = v.what();
    CHECK(msg.find("free-edge-budget") != std::string::npos);
    CHECK(msg.find("component") != std::string::npos);
  }
}

TEST_CASE("a passive breaker trips the directed-tree check on oriented boards") {
  Graph g = cg::random_regular(40, 4, 6);
  auto [o, cert] = cg::short_orientation(g);
  (void)cert;
  GameConfig cfg;
  cfg.b = 2;
  GameState st(g, cfg, o);
  auto maker = cg::maker_tree_strategy(0);
  sabotage::PassBreaker pass;
  auto monitor = cg::directed_tree_monitor();
  std::vector<cg::Monitor*> monitors{monitor.get()};
  CHECK_THROWS_AS(cg::play(st, *maker, pass, monitors), MonitorViolation);
}

TEST_CASE("claiming high out-arcs first trips the height floor") {
  bool fired = false;
  for (std::uint64_t seed = 1; seed <= 6 && !fired; ++seed) {
    Graph g = cg::random_regular(40, 4, seed);
    auto [o, cert] = cg::short_orientation(g);
    (void)cert;
    GameConfig cfg;
    cfg.b = 2;
    GameState st(g, cfg, o);
    auto maker = cg::maker_tree_strategy(0);
    sabotage::HighOutBreaker high;
    auto monitor = cg::out_arc_height_monitor();
    std::vector<cg::Monitor*> monitors{monitor.get()};
    try {
      cg::play(st, *maker, high, monitors);
    } catch (const MonitorViolation&) {
      fired = true;
    }
  }
  CHECK(fired);
}

TEST_CASE("a passive breaker trips the width bound") {
  Graph g = cg::random_regular(40, 4, 7);
  auto [o, cert] = cg::short_orientation(g);
  (void)cert;
  GameConfig cfg;
  cfg.b = 2;
  GameState st(g, cfg, o);
  auto maker = cg::maker_tree_strategy(0);
  sabotage::PassBreaker pass;
  auto monitor = cg::width_monitor(4);
  std::vector<cg::Monitor*> monitors{monitor.get()};
  CHECK_THROWS_AS(cg::play(st, *maker, pass, monitors), MonitorViolation);
}

TEST_CASE("monitor preconditions") {
  Graph g = cg::random_regular(20, 4, 8);
  GameConfig two;
  two.m = 2;
  two.b = 2;
  GameState st(g, two);
  st.apply_step(Player::Maker, 0);
  auto budget = cg::free_edge_budget_monitor(4, 2);
  CHECK_THROWS_AS(budget->after_move(st, Player::Maker), std::logic_error);

  GameConfig one;
  one.b = 3;
  GameState other(g, one);
  other.apply_step(Player::Maker, 0);
  auto mismatched = cg::free_edge_budget_monitor(4, 2);
  CHECK_THROWS_AS(mismatched->after_move(other, Player::Maker), std::logic_error);

  GameState plain(g, one);
  plain.apply_step(Player::Maker, 0);
  auto tree_mon = cg::directed_tree_monitor();
  CHECK_THROWS_AS(tree_mon->after_move(plain, Player::Maker), std::logic_error);
}
