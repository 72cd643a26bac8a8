#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "cg/game.hpp"

namespace cg {

// Thrown when a play-time invariant fails. what() names the monitor and
// dumps the offending component (vertices, heights, free arcs).
class MonitorViolation : public std::runtime_error {
 public:
  explicit MonitorViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Pluggable post-move assertion. play() invokes after_move once per completed
// move. Monitors keep private state by reading the history incrementally and
// assert only after Breaker moves, when component invariants are stable; the
// intermediate states right after a Maker merge are legitimately transient.
// Checks run on the components touched since the last Breaker move, which is
// complete: Breaker claims only shrink free-edge sets, so an untouched
// component that satisfied an invariant still does.
class Monitor {
 public:
  virtual ~Monitor() = default;
  virtual std::string name() const = 0;
  virtual void after_move(const GameState& st, Player mover) = 0;
};

// (1:b) play against the reactive Breaker on a d-regular graph: at the start
// of each round every component S has at most max(0, (d-2-b)|S| + b + 2)
// free incident edges. The clamp matters for b > d-2: two live components
// can merge into one whose unclamped budget is negative while a couple of
// free edges legally remain for Breaker to sweep up.
std::unique_ptr<Monitor> free_edge_budget_monitor(int d, int b);

// Oriented games: each Maker component is a directed tree, i.e. the engine's
// parent links are Maker-claimed arcs pointing away from a unique root, the
// stored heights are the tree depths, free external arcs enter only at the
// root, and the type (number of free in-arcs) stays below the root degree.
std::unique_ptr<Monitor> directed_tree_monitor();

// Oriented games vs the global Breaker: once Breaker claims an out-arc while
// responding to a tree, later free out-arcs of that tree never dip below the
// claimed tail height. Only response claims raise the floor; padding claims
// into untouched trees carry no height promise.
std::unique_ptr<Monitor> out_arc_height_monitor();

// Oriented games: a tree of type t in [1, d-1] has width at most d-t and a
// type-0 tree at most 2d-2, where width at level i counts the vertices at
// height i plus the free out-arcs leaving below it.
std::unique_ptr<Monitor> width_monitor(int d);

}  // namespace cg
