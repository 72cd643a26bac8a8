#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cg/game.hpp"
#include "cg/monitor.hpp"
#include "cg/strategy.hpp"

namespace cg {

struct PlayOutcome {
  int max_component = 1;
  int rounds = 0;
  bool forfeited = false;
};

// One completed move: every step the player took that turn. A Maker record
// with fewer than m edges is a forfeit, a Breaker record with fewer than b
// edges a pass, unless the board ran out; replay re-derives this.
struct MoveRecord {
  int round = 0;
  Player player = Player::Maker;
  std::vector<int> edges;
};

// JSONL record of a full game: a header object, one object per move, and a
// trailer object. Replay from the same graph is bit-exact: identical outcome
// and final edge ownership.
struct Transcript {
  std::string graph_hash;
  int n = 0;
  int m_edges = 0;
  int m = 1;
  int b = 1;
  Player first = Player::Maker;
  std::string maker;
  std::string breaker;
  std::uint64_t seed = 0;
  std::vector<MoveRecord> moves;
  PlayOutcome outcome;

  std::string to_jsonl() const;
  static Transcript parse_jsonl(const std::string& text);
};

// Drives the game to the end: strategies move alternately, a Maker nullopt
// forfeits, a Breaker nullopt passes, and each monitor runs after every
// completed move. Illegal strategy steps propagate as exceptions.
PlayOutcome play(GameState& st, Strategy& maker, Strategy& breaker,
                 const std::vector<Monitor*>& monitors = {});

Transcript play_recorded(GameState& st, Strategy& maker, Strategy& breaker,
                         const std::vector<Monitor*>& monitors = {});

struct ReplayResult {
  PlayOutcome outcome;
  std::vector<Owner> owners;
};

// Re-applies a transcript's moves on a fresh plain-mode state.
ReplayResult replay(const Graph& g, const Transcript& t);

}  // namespace cg
