#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyconv/exact.hpp"
#include "cyconv/multigraph.hpp"
#include "cyconv/vertex_set.hpp"

namespace cyconv {

// Combinatorial embedding: two darts per edge copy, a cyclic dart order
// around every vertex, faces traced with the rule "the dart after d is the
// rotation successor of twin(d) at the vertex d points to". The orientation
// convention is fixed once here; face convexity treats all faces alike, so
// the outer face is never distinguished.
struct PlaneGraph {
  Multigraph underlying;
  std::vector<int> twin;                        // dart -> dart
  std::vector<int> dart_owner;                  // dart -> vertex it leaves
  std::vector<std::vector<int>> rotation;       // vertex -> darts, cyclic
  std::vector<std::vector<int>> face_darts;     // face -> dart cycle
  std::vector<std::vector<int>> face_vertices;  // distinct ids, ascending

  int n() const { return underlying.n(); }
  int num_darts() const { return int(twin.size()); }
  int num_faces() const { return int(face_darts.size()); }
  int head(int dart) const { return dart_owner[twin[dart]]; }
};

// Validates the dart structure (twins form a perfect matching, every dart
// sits in exactly one rotation, no loops, no isolated vertices) and checks
// the Euler relation n - e + f = 1 + #components, rejecting rotation
// systems that do not describe a plane graph.
PlaneGraph make_plane_graph(int n, std::vector<std::vector<int>> rotations,
                            const std::vector<std::pair<int, int>>& twins);

// {"vertices": n, "rotations": [[dart, ...], ...], "twins": [[d1, d2], ...]}
PlaneGraph parse_rotation_json(const std::string& text);
std::string rotation_to_json(const PlaneGraph& pg);

// One synchronous application of the face interval: s plus every vertex v
// having a face F with v in V(F) and V(F) \ {v} inside s.
VertexSet interval_fc(const PlaneGraph& pg, const VertexSet& s);

struct FaceTrace {
  std::vector<int> step;          // -1 = never
  std::vector<int> witness_face;  // face index, -1 for seeds / never
  VertexSet hull;
};

FaceTrace hull_fc(const PlaneGraph& pg, const VertexSet& s);
VertexSet hull_set_fc(const PlaneGraph& pg, const VertexSet& s);
bool is_hull_set_fc(const PlaneGraph& pg, const VertexSet& s);

// Minimum face-hull set via the exact search engine with interval_fc
// plugged in.
SolveReport hn_fc_exact(const PlaneGraph& pg, const SolveOptions& opts = {});

struct PercolationResult {
  bool percolates = false;
  std::vector<int> removal_order;
};

// Vertex-removal process on a 4-regular plane graph: while some face has
// exactly one unmarked vertex v, smooth v so that the triggering face and
// its opposite face at v merge while the two side faces persist. True iff
// every vertex ends up marked or removed.
PercolationResult dynamic_percolation(const PlaneGraph& pg,
                                      const VertexSet& s);

}  // namespace cyconv
