#include <stdexcept>
#include <string>

#include "cg/game.hpp"
#include "cg/graph.hpp"
#include "cg/strategy.hpp"
#include "cg/transcript.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "sabotage.hpp"

using cg::GameConfig;
using cg::GameState;
using cg::Graph;
using cg::Player;
using cg::Transcript;

namespace {

Transcript record_game(const Graph& g, GameConfig cfg, cg::Strategy& maker, cg::Strategy& breaker) {
  GameState st(g, cfg);
  return cg::play_recorded(st, maker, breaker);
}

void check_replay(const Graph& g, const Transcript& t) {
  auto r = cg::replay(g, t);
  CHECK(r.outcome.max_component == t.outcome.max_component);
  CHECK(r.outcome.rounds == t.outcome.rounds);
  CHECK(r.outcome.forfeited == t.outcome.forfeited);

  GameState st(g, [&] {
    GameConfig c;
    c.m = t.m;
    c.b = t.b;
    c.first = t.first;
    return c;
  }());
  // replay owners must equal a literal re-application, which play() produced:
  // a record shorter than the player's allotment means a pass (breaker) or a
  // forfeit (maker) unless the game already ended
  for (const auto& mv : t.moves) {
    for (int e : mv.edges) st.apply_step(mv.player, e);
    if (!st.over() && st.turn() == mv.player) {
      if (mv.player == Player::Maker)
        st.forfeit(mv.player);
      else
        st.pass_move(mv.player);
    }
  }
  CHECK(r.owners == st.owners());
}

}  // namespace

TEST_CASE("jsonl round trip preserves every field") {
  Graph g = cg::random_regular(20, 3, 4);
  GameConfig cfg;
  cfg.b = 2;
  cfg.seed = 99;
  GameState st(g, cfg);
  auto maker = cg::maker_tree_strategy(0);
  auto breaker = cg::breaker_reactive_greedy();
  Transcript t = cg::play_recorded(st, *maker, *breaker);
  t.seed = 99;

  Transcript back = Transcript::parse_jsonl(t.to_jsonl());
  CHECK(back.to_jsonl() == t.to_jsonl());
  CHECK(back.graph_hash == g.canonical_hash_hex());
  CHECK(back.n == 20);
  CHECK(back.m_edges == 30);
  CHECK(back.m == 1);
  CHECK(back.b == 2);
  CHECK(back.first == Player::Maker);
  CHECK(back.maker == "tree[root=0]");
  CHECK(back.breaker == "reactive");
  CHECK(back.seed == 99);
  CHECK(back.moves.size() == t.moves.size());
  CHECK(back.outcome.max_component == t.outcome.max_component);
}

TEST_CASE("replay is bit-exact for ordinary games") {
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = cg::random_regular(24, 4, seed);
    GameConfig cfg;
    cfg.b = 2;
    auto maker = cg::maker_random(seed);
    auto breaker = cg::breaker_reactive_greedy();
    Transcript t = record_game(g, cfg, *maker, *breaker);
    check_replay(g, t);
  }
}

TEST_CASE("replay is bit-exact when the maker forfeits") {
  Graph g = cg::random_regular(50, 3, 8);
  GameConfig cfg;
  auto maker = cg::maker_tree_strategy(0);
  auto breaker = cg::breaker_counter_tree();
  Transcript t = record_game(g, cfg, *maker, *breaker);
  REQUIRE(t.outcome.forfeited);
  check_replay(g, t);
}

TEST_CASE("replay is bit-exact for passes") {
  Graph g = fixtures::path_graph(6);
  GameConfig cfg;
  auto maker = cg::maker_tree_strategy(0);
  sabotage::PassBreaker pass;
  Transcript t = record_game(g, cfg, *maker, pass);
  bool saw_empty_breaker_move = false;
  for (const auto& mv : t.moves)
    if (mv.player == Player::Breaker && mv.edges.empty()) saw_empty_breaker_move = true;
  CHECK(saw_empty_breaker_move);
  check_replay(g, t);
}

TEST_CASE("replay distinguishes a target stop from a forfeit") {
  // (2:1) with target 2: the maker's final move is one edge short of m, yet
  // the game ended by reaching the target, not by forfeiting.
  Graph g = fixtures::path_graph(8);
  GameConfig cfg;
  cfg.m = 2;
  cfg.target_s = 2;
  GameState st(g, cfg);
  auto maker = cg::maker_tree_strategy(0);
  auto breaker = cg::breaker_reactive_greedy();
  Transcript t = cg::play_recorded(st, *maker, *breaker);
  REQUIRE(!t.outcome.forfeited);
  REQUIRE(t.moves.back().player == Player::Maker);
  REQUIRE(static_cast<int>(t.moves.back().edges.size()) < t.m);
  auto r = cg::replay(g, t);
  CHECK(!r.outcome.forfeited);
  CHECK(r.outcome.max_component == t.outcome.max_component);
  CHECK(r.outcome.rounds == t.outcome.rounds);
}

TEST_CASE("replay rejects the wrong graph") {
  Graph g = cg::random_regular(20, 3, 4);
  Graph other = cg::random_regular(20, 3, 5);
  GameConfig cfg;
  auto maker = cg::maker_tree_strategy(0);
  auto breaker = cg::breaker_reactive_greedy();
  Transcript t = record_game(g, cfg, *maker, *breaker);
  CHECK_THROWS_AS(cg::replay(other, t), std::invalid_argument);
}

TEST_CASE("parser rejects malformed transcripts") {
  Graph g = fixtures::path_graph(4);
  GameConfig cfg;
  auto maker = cg::maker_tree_strategy(0);
  auto breaker = cg::breaker_reactive_greedy();
  Transcript t = record_game(g, cfg, *maker, *breaker);
  std::string good = t.to_jsonl();

  CHECK_THROWS_AS(Transcript::parse_jsonl(""), std::runtime_error);
  CHECK_THROWS_AS(Transcript::parse_jsonl("{\"round\":1}\n"), std::runtime_error);  // no header
  CHECK_THROWS_AS(Transcript::parse_jsonl(good + "not json\n"), std::runtime_error);

  // duplicated header
  auto first_line = good.substr(0, good.find('\n') + 1);
  CHECK_THROWS_AS(Transcript::parse_jsonl(first_line + good), std::runtime_error);

  // line numbers surface in the message
  try {
    Transcript::parse_jsonl(good + "not json\n");
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}
