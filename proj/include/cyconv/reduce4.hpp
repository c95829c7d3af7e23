#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyconv/multigraph.hpp"
#include "cyconv/vertex_set.hpp"

namespace cyconv {

enum class OpKind { M4, M2Path, M2Cycle, M3, T };

// One applied operation, with enough context to replay it forward and to
// lift a hull set backwards. Ids live in a universe that only grows: the
// original ids first, then one fresh id per T step.
struct ReductionStep {
  OpKind kind;
  std::vector<int> removed;                     // ascending universe ids
  std::vector<std::pair<int, int>> added_edges;  // one entry per copy
  int added_vertex = -1;  // T: the replacement vertex w
  int designated = -1;    // M4 / M2 / M3: the vertex the lift adds back
  // T labels: the triangle and its outside neighbors
  int x = -1, y = -1, z = -1;
  int x1 = -1, x2 = -1, y1 = -1, y2 = -1, z1 = -1, z2 = -1;
};

enum class TerminalKind { Empty, TwoVertexQuad, Nontrivial };

struct ReductionScript {
  int original_n = 0;
  int universe = 0;  // original_n plus one id per T step
  std::vector<ReductionStep> steps;
  std::vector<int> terminal_vertices;  // alive universe ids at the end
  TerminalKind terminal_kind = TerminalKind::Empty;
};

// Exhaustively applies the highest-priority applicable operation
// (M4 > M2 > M3 > T), lowest-id tie-break among candidates. Every
// intermediate graph is asserted 4-regular and loopless.
ReductionScript reduce(const Multigraph& g);

// Walks the script backwards, adding exactly one vertex per step.
// terminal_hull must be a hull set of the terminal graph (empty set for an
// empty terminal). T steps first move the replacement vertex w out of the
// set by a verified swap, then follow the case analysis on the trigger
// cycle, with an exhaustive {x, y, z} fallback; every lifted set is
// verified against the pre-graph before the walk continues.
VertexSet lift_hull_set(const Multigraph& g, const ReductionScript& script,
                        const std::vector<int>& terminal_hull);

struct UpperBoundResult {
  int bound = 0;
  VertexSet witness;
  ReductionScript script;
};

// Constructive half-the-vertices bound: reduce, seed the terminal (one
// vertex for the two-vertex terminal, nothing for an empty one), lift, and
// verify. A nontrivial terminal (possible for non-planar input) is an
// error, not a silent answer.
UpperBoundResult hn_upper_4regular(const Multigraph& g);

std::string script_to_json(const ReductionScript& script);
ReductionScript script_from_json(const std::string& text);

// Replays one step on its pre-graph (universe ids, dead ids isolated);
// used by tests to check the recorded scripts.
Multigraph replay_step(const Multigraph& pre_universe,
                       const ReductionStep& step, int universe);

}  // namespace cyconv
