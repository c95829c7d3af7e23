#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyconv/convexity.hpp"
#include "cyconv/multigraph.hpp"
#include "cyconv/vertex_set.hpp"

namespace cyconv {

// Plug-in point for the search engine: one application of an interval
// function, or a full hull closure. Both must be extensive, monotone and
// idempotent-closing on [0, n).
using IntervalFn = std::function<VertexSet(const VertexSet&)>;
using HullFn = std::function<VertexSet(const VertexSet&)>;

struct SolveOptions {
  int threads = 1;  // > 1 parallelizes the root branches of each deepening
};

struct SolveReport {
  int hn = 0;
  VertexSet witness;
  VertexSet forced;  // vertices forced by singleton co-convexity
  int lower_bound = 0;
  uint64_t nodes_explored = 0;
};

struct Preprocessed {
  Multigraph stripped;
  VertexSet forced;          // deleted vertices, in original ids
  int offset = 0;            // == forced.count()
  std::vector<int> kept_ids;  // stripped id -> original id
};

// Deletes every vertex lying on no cycle (each contributes +1 to the hull
// number and belongs to every minimum hull set). One pass reaches the fixed
// point: removing an off-cycle vertex destroys no cycle.
Preprocessed preprocess(const Multigraph& g);

// Per-component sum: p+1 for a simple connected component with >= 2
// vertices and p blocks, otherwise 1 per component.
int lower_bound(const Multigraph& g);

// Iterative deepening over the target size k. Partial sets grow only with
// vertices outside hull(P), in ascending id order; reports are identical
// for any thread count.
SolveReport solve_cc(const Multigraph& g, const SolveOptions& opts = {});

// Generic engine: ground set [0, n), hull closure, a starting lower bound
// and a set of vertices known to lie in every hull set.
SolveReport solve_with_hull(int n, const HullFn& hull, int lb,
                            const VertexSet& forced,
                            const SolveOptions& opts = {});

// Exhaustive oracle: subsets in increasing cardinality, lexicographic
// within a cardinality. Guarded to n <= 20.
SolveReport brute_force_hn(int n, const IntervalFn& interval,
                           const SolveOptions& opts = {});
SolveReport brute_force_hn_cc(const Multigraph& g,
                              const SolveOptions& opts = {});

// All co-convex sets of size <= max_size (hitting-set diagnostics).
std::vector<VertexSet> enumerate_coconvex(const Multigraph& g, int max_size);

}  // namespace cyconv
