#pragma once

// Embedded test graphs: canonical embeddings of cycles and grids, a random
// planar-growth builder, and the medial construction (every medial of a
// plane graph is a 4-regular plane graph).

#include <map>
#include <random>
#include <vector>

#include "cyconv/plane.hpp"
#include "support/generators.hpp"

namespace cyconv::testing {

inline PlaneGraph cycle_plane(int n) {
  // dart 2i leaves vertex i toward i+1, dart 2i+1 leaves i toward i-1
  std::vector<std::vector<int>> rot(n);
  std::vector<std::pair<int, int>> twins;
  for (int i = 0; i < n; ++i) {
    rot[i] = {2 * i, 2 * i + 1};
    twins.emplace_back(2 * i, (2 * ((i + 1) % n)) + 1);
  }
  return make_plane_graph(n, std::move(rot), twins);
}

inline PlaneGraph single_edge_plane() {
  return make_plane_graph(2, {{0}, {1}}, {{0, 1}});
}

inline PlaneGraph grid_plane(int m, int n) {
  // darts numbered per (vertex, direction): 0=E, 1=N, 2=W, 3=S
  auto dart = [&](int i, int j, int dir) { return 4 * (i * n + j) + dir; };
  std::vector<std::vector<int>> rot(m * n);
  std::vector<std::pair<int, int>> twins;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int>& r = rot[i * n + j];
      if (j + 1 < n) r.push_back(dart(i, j, 0));
      if (i > 0) r.push_back(dart(i, j, 1));
      if (j > 0) r.push_back(dart(i, j, 2));
      if (i + 1 < m) r.push_back(dart(i, j, 3));
      if (j + 1 < n) twins.emplace_back(dart(i, j, 0), dart(i, j + 1, 2));
      if (i + 1 < m) twins.emplace_back(dart(i, j, 3), dart(i + 1, j, 1));
    }
  // compact the dart ids (unused slots exist at the boundary)
  std::map<int, int> remap;
  for (auto& r : rot)
    for (int d : r) {
      int id = int(remap.size());
      remap.emplace(d, id);
    }
  // two-pass: assign ids in rotation order, then rewrite
  remap.clear();
  for (auto& r : rot)
    for (int& d : r) {
      auto it = remap.find(d);
      if (it == remap.end()) it = remap.emplace(d, int(remap.size())).first;
      d = it->second;
    }
  for (auto& [a, b] : twins) {
    a = remap.at(a);
    b = remap.at(b);
  }
  return make_plane_graph(m * n, std::move(rot), twins);
}

// Medial graph: one vertex per edge of pg, one edge per corner of pg.
inline PlaneGraph medial(const PlaneGraph& pg) {
  int d_total = pg.num_darts();
  std::vector<int> pos(d_total), edge_of(d_total);
  for (int v = 0; v < pg.n(); ++v)
    for (size_t i = 0; i < pg.rotation[v].size(); ++i)
      pos[pg.rotation[v][i]] = int(i);
  int num_edges = 0;
  for (int d = 0; d < d_total; ++d)
    if (d < pg.twin[d]) edge_of[d] = edge_of[pg.twin[d]] = num_edges++;
  auto rot_next = [&](int d) {
    const auto& r = pg.rotation[pg.dart_owner[d]];
    return r[(pos[d] + 1) % r.size()];
  };
  auto rot_prev = [&](int d) {
    const auto& r = pg.rotation[pg.dart_owner[d]];
    return r[(pos[d] + r.size() - 1) % r.size()];
  };
  // corner c identified by its first dart a: the corner between a and
  // rot_next(a); its medial edge has darts 2a (at edge_of(a)) and 2a+1
  // (at edge_of(rot_next(a)))
  std::vector<std::vector<int>> rot(num_edges);
  std::vector<std::pair<int, int>> twins;
  for (int a = 0; a < d_total; ++a) twins.emplace_back(2 * a, 2 * a + 1);
  for (int d = 0; d < d_total; ++d) {
    if (d > pg.twin[d]) continue;
    int dh = pg.twin[d];
    int e = edge_of[d];
    rot[e] = {2 * rot_prev(dh) + 1, 2 * d, 2 * rot_prev(d) + 1, 2 * dh};
  }
  return make_plane_graph(num_edges, std::move(rot), twins);
}

namespace detail {

// one growth step; make_plane_graph revalidates all invariants, so any
// slip in the surgery surfaces immediately as an Euler failure
inline PlaneGraph grow_plane(Rng& rng, const PlaneGraph& pg) {
  std::vector<std::vector<int>> rot = pg.rotation;
  std::vector<std::pair<int, int>> twins;
  for (int d = 0; d < pg.num_darts(); ++d)
    if (d < pg.twin[d]) twins.emplace_back(d, pg.twin[d]);
  int next_dart = pg.num_darts();
  int n = pg.n();

  auto insert_after = [&](int v, int anchor, int fresh) {
    auto& r = rot[v];
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] == anchor) {
        r.insert(r.begin() + i + 1, fresh);
        return;
      }
    r.push_back(fresh);
  };

  int op = pick(rng, 0, 2);
  if (op == 0) {
    // parallel copy of an existing edge, hugging it
    int d = pick(rng, 0, pg.num_darts() - 1);
    int u = pg.dart_owner[d], v = pg.head(d);
    int a = next_dart++, b = next_dart++;
    insert_after(u, d, a);
    // b goes right before twin(d): equivalently after rot_prev(twin(d))
    auto& rv = rot[v];
    for (size_t i = 0; i < rv.size(); ++i)
      if (rv[i] == pg.twin[d]) {
        rv.insert(rv.begin() + i, b);
        break;
      }
    twins.emplace_back(a, b);
  } else {
    // pick a face and two corners on it; corner i sits at the vertex of
    // face dart i+1, between twin(face[i]) and face[i+1]
    int f = pick(rng, 0, pg.num_faces() - 1);
    const auto& cyc = pg.face_darts[f];
    int len = int(cyc.size());
    int i = pick(rng, 0, len - 1), j = pick(rng, 0, len - 1);
    int vi = pg.dart_owner[cyc[(i + 1) % len]];
    int vj = pg.dart_owner[cyc[(j + 1) % len]];
    if (op == 1) {
      // chord between two distinct-vertex corners of the face
      if (i == j || vi == vj) return pg;  // try again next round
      int a = next_dart++, b = next_dart++;
      insert_after(vi, pg.twin[cyc[i]], a);
      insert_after(vj, pg.twin[cyc[j]], b);
      twins.emplace_back(a, b);
    } else {
      // new degree-2 vertex inside the face, tied to two corners
      if (i == j) return pg;
      int w = n++;
      int a1 = next_dart++, b1 = next_dart++;
      int a2 = next_dart++, b2 = next_dart++;
      insert_after(vi, pg.twin[cyc[i]], a1);
      insert_after(vj, pg.twin[cyc[j]], a2);
      rot.push_back({b1, b2});
      twins.emplace_back(a1, b1);
      twins.emplace_back(a2, b2);
    }
  }
  return make_plane_graph(n, std::move(rot), twins);
}

}  // namespace detail

inline PlaneGraph random_plane_graph(Rng& rng, int base_cycle, int ops) {
  PlaneGraph pg = cycle_plane(base_cycle);
  for (int i = 0; i < ops; ++i) pg = detail::grow_plane(rng, pg);
  return pg;
}

}  // namespace cyconv::testing
