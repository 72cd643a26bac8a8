#pragma once

#include "cg/game.hpp"
#include "cg/graph.hpp"

namespace cg {

// Exact winner of the s-component game under optimal play, by memoized
// exhaustive search. Guarded to boards of at most 16 edges; the memo key
// packs the full position (two bits per edge plus turn and steps left).
Player minimax_solve(const Graph& g, const GameConfig& cfg, int target_s);

}  // namespace cg
