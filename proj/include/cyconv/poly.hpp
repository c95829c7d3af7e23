#pragma once

#include <memory>
#include <vector>

#include "cyconv/exact.hpp"
#include "cyconv/multigraph.hpp"

namespace cyconv {

SolveReport hn_forest(const Multigraph& g);

// Connected simple chordal graphs: hull number = #blocks + 1, witness built
// from a block-cutpoint tree rooted at a leaf block. Disconnected simple
// chordal input is summed per component.
SolveReport hn_chordal(const Multigraph& g);

SolveReport hn_grid(int m, int n);

struct DecompNode {
  enum class Kind { Leaf, Union, Join, SpiderThin, SpiderFat };
  Kind kind = Kind::Leaf;
  std::vector<int> vertices;  // ids in the host graph, ascending
  std::vector<std::unique_ptr<DecompNode>> children;  // spider: head or none
  // spider partition (host ids); stable[i] is the partner of clique[i]
  std::vector<int> clique, stable;
  // annotations filled by hn_p4sparse
  int hn = -1;
  std::vector<int> witness;
};

// Recursive recognition: disconnected -> union of components, co-disconnected
// -> join of co-components, else spider with the head recursed on. Throws
// graph_error("not P4-sparse") when no case applies.
std::unique_ptr<DecompNode> decompose_p4sparse(const Multigraph& g);

SolveReport hn_p4sparse(const Multigraph& g);

// Fold order for binarizing multi-child union/join nodes; the result is the
// same either way (asserted by tests), the knob exists for that test.
enum class FoldOrder { SmallestFirst, LargestFirst };
SolveReport hn_p4sparse_with_fold(const Multigraph& g, FoldOrder order);

}  // namespace cyconv
