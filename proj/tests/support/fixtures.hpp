#pragma once

// Shared graph fixtures for the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include "cg/graph.hpp"

namespace fixtures {

// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i,i+5.
cg::Graph petersen();

// Simple path on n vertices, edges (i, i+1).
cg::Graph path_graph(int n);

// Exact isomorphism test by backtracking over vertex maps. Meant for the
// small catalog graphs (n <= 10 or so), not for anything large.
bool isomorphic(const cg::Graph& a, const cg::Graph& b);

// All connected 3-regular graphs on n vertices, pairwise non-isomorphic,
// found by seeded configuration-model sampling plus isomorphism dedup.
// Deterministic. The classical counts are 1, 2, 5, 19 for n = 4, 6, 8, 10;
// the sample budgets make missing a class astronomically unlikely, and the
// callers assert the counts so a miss would be loud.
std::vector<cg::Graph> cubic_catalog(int n);

}  // namespace fixtures
