#pragma once

#include <vector>

#include "cyconv/multigraph.hpp"
#include "cyconv/vertex_set.hpp"

namespace cyconv {

// One synchronous application of the cycle interval: s plus every outside
// vertex sending at least two edge endpoints (counting multiplicity) into a
// single connected component of g[s].
VertexSet interval_cc(const Multigraph& g, const VertexSet& s);

// Audit trail of a hull computation. Steps follow the synchronous
// round semantics: step 0 for seeds, step k for vertices first reachable
// after k interval applications. witness[v] is a cycle through v whose
// other vertices all have strictly smaller steps (empty for seeds and
// uncontaminated vertices).
struct ContaminationTrace {
  std::vector<int> step;  // -1 = never contaminated
  std::vector<std::vector<int>> witness;
  VertexSet hull;
};

// Fixed point of interval_cc. Implemented incrementally with a union-find
// over contaminated components and per-(vertex, component) edge counts;
// witnesses are assembled afterwards from the recorded trigger edges.
ContaminationTrace hull_cc(const Multigraph& g, const VertexSet& s);

// Hull membership only; skips witness assembly.
VertexSet hull_set_cc(const Multigraph& g, const VertexSet& s);

bool is_convex_cc(const Multigraph& g, const VertexSet& s);
bool is_coconvex_cc(const Multigraph& g, const VertexSet& s);
bool is_hull_set(const Multigraph& g, const VertexSet& s);

// Number of boundary walls of s when the m x n grid is read as the cells
// of an (m+1) x (n+1) board: each cell contributes its four walls minus the
// walls shared with another cell of s. s must live on make_grid(m, n) ids.
int grid_perimeter(int m, int n, const VertexSet& s);

}  // namespace cyconv
