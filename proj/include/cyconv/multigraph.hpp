#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyconv/vertex_set.hpp"

namespace cyconv {

// Loopless undirected multigraph with dense vertex ids 0..n-1.
// Parallel edges are stored as a multiplicity per unordered pair; individual
// copies are never identified. Intended usage is build-then-freeze: all
// algorithms take a const reference, so a constructed graph can be shared
// across threads.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : adj_(n) {}

  int n() const { return int(adj_.size()); }

  // Edge count including multiplicity.
  int m() const { return m_; }

  // Rejects loops (u == v) and out-of-range ids.
  void add_edge(int u, int v, int mult = 1);

  // Removes up to `mult` copies of uv.
  void remove_edge(int u, int v, int mult = 1);

  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  int degree(int v) const;

  // Neighbors with multiplicities, ascending by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adj_[v];
  }

  bool is_simple() const;

  // Every edge repeated by multiplicity, as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;

  // Induced subgraph g[keep]; `old_ids` receives the new->old id map.
  Multigraph induced(const VertexSet& keep, std::vector<int>* old_ids = nullptr) const;

 private:
  std::vector<std::vector<std::pair<int, int>>> adj_;
  int m_ = 0;
};

// --- parsing ------------------------------------------------------------

// Accepts the JSON format {"vertices": n, "edges": [[u,v], ...]} (repeated
// pairs encode multiplicity) or the '#'-comment text format whose first
// data line is n followed by one "u v" pair per line.
Multigraph parse_graph(const std::string& text);

std::string graph_to_json(const Multigraph& g);

// --- connectivity and blocks ---------------------------------------------

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Multigraph& g);

struct BlockCutTree {
  // Vertex sets of the blocks (maximal 2-connected subgraphs; a bridge or an
  // isolated vertex forms its own block). Sorted by smallest member.
  std::vector<VertexSet> blocks;
  // Total edge copies inside each block; a block contains a cycle iff >= 2.
  std::vector<int> block_edge_count;
  VertexSet cut_vertices;
  // (block index, cut vertex) incidences; these are the forest edges.
  std::vector<std::pair<int, int>> tree_edges;
};

BlockCutTree block_cut_tree(const Multigraph& g);

// True iff v belongs to some cycle (a 2-cycle of parallel edges counts).
bool vertex_on_cycle(const Multigraph& g, int v);
VertexSet vertices_on_cycles(const Multigraph& g);

bool is_forest(const Multigraph& g);

struct ChordalityCheck {
  bool simple = false;
  bool chordal = false;  // meaningful only when simple
  std::vector<int> elimination_order;
};

// Maximum-cardinality search plus verification of the elimination order.
ChordalityCheck is_chordal(const Multigraph& g);

struct GridMatch {
  int rows = 0;
  int cols = 0;
  // coords[v] = (i, j) with 0 <= i < rows, 0 <= j < cols.
  std::vector<std::pair<int, int>> coords;
};

// Best-effort recognition: anchors a low-degree corner, propagates
// coordinates by BFS, then verifies the full edge set. Returns nullopt if
// g is not a grid (or the heuristic fails to find an anchor).
std::optional<GridMatch> detect_grid(const Multigraph& g);

// --- generators -----------------------------------------------------------

// Vertex (i, j) of the m x n grid gets id i*n + j.
Multigraph make_grid(int m, int n);

// Two disjoint k-cycles (u_0..u_{k-1}) = ids 0..k-1 and (v_0..v_{k-1}) =
// ids k..2k-1, plus rungs u_i v_i of multiplicity two. For k = 2 the
// "cycles" degenerate to double edges, keeping the graph 4-regular.
Multigraph make_gk(int k);

enum class SpiderKind { Thin, Fat };

// Clique K = ids 0..k-1, stable set S = ids k..2k-1 (s_i paired with k_i),
// head = ids 2k.. . A fat spider with k = 2 coincides with the thin one and
// is normalized to it.
Multigraph make_spider(SpiderKind kind, int k, const Multigraph& head);

Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
Multigraph complement(const Multigraph& g);

}  // namespace cyconv
