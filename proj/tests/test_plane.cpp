#include "cyconv/plane.hpp"

#include "cyconv/errors.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/plane_support.hpp"

using namespace cyconv;
using namespace cyconv::testing;

TEST_CASE("face tracing") {
  SUBCASE("square") {
    PlaneGraph sq = cycle_plane(4);
    CHECK(sq.num_faces() == 2);
    for (const auto& vs : sq.face_vertices) CHECK(vs.size() == 4);
  }
  SUBCASE("single edge has one face") {
    PlaneGraph e = single_edge_plane();
    CHECK(e.num_faces() == 1);
    CHECK(e.face_vertices[0] == std::vector<int>({0, 1}));
  }
  SUBCASE("grids satisfy euler") {
    for (int m = 2; m <= 4; ++m)
      for (int n = 2; n <= 4; ++n) {
        PlaneGraph g = grid_plane(m, n);
        CHECK(g.num_faces() == (m - 1) * (n - 1) + 1);
      }
  }
  SUBCASE("inconsistent structures rejected") {
    CHECK_THROWS_AS(make_plane_graph(2, {{0}, {1}}, {{0, 0}}), graph_error);
    CHECK_THROWS_AS(make_plane_graph(1, {{0, 1}}, {{0, 1}}), graph_error);
    CHECK_THROWS_AS(make_plane_graph(3, {{0}, {1}, {}}, {{0, 1}}),
                    graph_error);
    // K4 with an embedding of the wrong genus
    CHECK_THROWS_AS(
        make_plane_graph(4,
                         {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                         {{0, 3}, {1, 6}, {2, 9}, {4, 7}, {5, 10}, {8, 11}}),
        graph_error);
  }
  SUBCASE("rotation json round trip") {
    PlaneGraph g = grid_plane(2, 3);
    PlaneGraph h = parse_rotation_json(rotation_to_json(g));
    CHECK(h.num_faces() == g.num_faces());
    CHECK(h.underlying.edge_list() == g.underlying.edge_list());
  }
}

TEST_CASE("medial graphs are 4-regular plane graphs") {
  for (int n = 3; n <= 6; ++n) {
    PlaneGraph med = medial(cycle_plane(n));
    CHECK(med.n() == n);
    for (int v = 0; v < med.n(); ++v) CHECK(med.underlying.degree(v) == 4);
  }
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 4; ++n) {
      PlaneGraph med = medial(grid_plane(m, n));
      CHECK(med.n() == make_grid(m, n).m());
      for (int v = 0; v < med.n(); ++v) CHECK(med.underlying.degree(v) == 4);
    }
}

TEST_CASE("random plane builder keeps the invariants") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    PlaneGraph pg = random_plane_graph(rng, pick(rng, 3, 6), pick(rng, 0, 8));
    int c = int(components(pg.underlying).size());
    CHECK(pg.n() - pg.underlying.m() + pg.num_faces() == 1 + c);
  }
}

TEST_CASE("interval_fc") {
  PlaneGraph sq = cycle_plane(4);
  CHECK(interval_fc(sq, VertexSet::of(4, {0, 1, 2})) == VertexSet::full(4));
  CHECK(interval_fc(sq, VertexSet::of(4, {0, 1})) == VertexSet::of(4, {0, 1}));
  CHECK(interval_fc(sq, VertexSet(4)) == VertexSet(4));
}

TEST_CASE("hull_fc traces") {
  Rng rng(111);
  for (int trial = 0; trial < 60; ++trial) {
    PlaneGraph pg = random_plane_graph(rng, pick(rng, 3, 6), pick(rng, 0, 7));
    VertexSet s = random_subset(rng, pg.n(), 0.4);
    FaceTrace tr = hull_fc(pg, s);
    CHECK(s.is_subset_of(tr.hull));
    CHECK(hull_set_fc(pg, tr.hull) == tr.hull);  // idempotent
    for (int v = 0; v < pg.n(); ++v) {
      if (tr.step[v] <= 0) continue;
      int f = tr.witness_face[v];
      REQUIRE(f >= 0);
      bool v_on_face = false;
      for (int u : pg.face_vertices[f]) {
        if (u == v) {
          v_on_face = true;
          continue;
        }
        CHECK(tr.step[u] >= 0);
        CHECK(tr.step[u] < tr.step[v]);
      }
      CHECK(v_on_face);
    }
    // monotone in the seed set
    VertexSet t = s | random_subset(rng, pg.n(), 0.2);
    CHECK(tr.hull.is_subset_of(hull_set_fc(pg, t)));
  }
}

TEST_CASE("face hull is contained in the cycle hull on 4-regular inputs") {
  Rng rng(222);
  std::vector<PlaneGraph> hosts;
  hosts.push_back(medial(cycle_plane(4)));
  hosts.push_back(medial(grid_plane(2, 3)));
  hosts.push_back(medial(grid_plane(3, 3)));
  for (const PlaneGraph& pg : hosts)
    for (int trial = 0; trial < 40; ++trial) {
      VertexSet s = random_subset(rng, pg.n(), 0.35);
      CHECK(hull_set_fc(pg, s).is_subset_of(hull_set_cc(pg.underlying, s)));
    }
}

TEST_CASE("hn_fc_exact on the square") {
  PlaneGraph sq = cycle_plane(4);
  SolveReport rep = hn_fc_exact(sq);
  CHECK(rep.hn == 3);
  CHECK(is_hull_set_fc(sq, rep.witness));
}

TEST_CASE("dynamic percolation") {
  SUBCASE("full seed set percolates with no removals") {
    PlaneGraph med = medial(grid_plane(2, 3));
    PercolationResult res = dynamic_percolation(med, VertexSet::full(med.n()));
    CHECK(res.percolates);
    CHECK(res.removal_order.empty());
  }
  SUBCASE("needs 4-regular input") {
    CHECK_THROWS_AS(dynamic_percolation(cycle_plane(4), VertexSet(4)),
                    graph_error);
  }
  SUBCASE("equivalent to face hull totality on random seeds") {
    Rng rng(333);
    std::vector<PlaneGraph> hosts;
    hosts.push_back(medial(cycle_plane(3)));
    hosts.push_back(medial(cycle_plane(5)));
    hosts.push_back(medial(grid_plane(2, 3)));
    hosts.push_back(medial(grid_plane(3, 3)));
    for (const PlaneGraph& pg : hosts)
      for (int trial = 0; trial < 60; ++trial) {
        VertexSet s = random_subset(rng, pg.n(), 0.5);
        bool by_hull = hull_set_fc(pg, s) == VertexSet::full(pg.n());
        CHECK(dynamic_percolation(pg, s).percolates == by_hull);
      }
  }
}
