#include "cyconv/convexity.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cyconv;
using namespace cyconv::testing;

TEST_CASE("interval_cc basics") {
  Multigraph k4 = complete_graph(4);
  CHECK(interval_cc(k4, VertexSet::of(4, {0, 1})) == VertexSet::full(4));

  Multigraph c4 = cycle_graph(4);
  CHECK(interval_cc(c4, VertexSet::of(4, {0, 1})) == VertexSet::of(4, {0, 1}));

  Multigraph dbl(2);
  dbl.add_edge(0, 1, 2);
  CHECK(interval_cc(dbl, VertexSet::of(2, {0})) == VertexSet::full(2));

  CHECK(interval_cc(k4, VertexSet(4)) == VertexSet(4));
}

TEST_CASE("interval_cc equals literal cycle search") {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int n = pick(rng, 1, 7);
    Multigraph g = random_multigraph(rng, n, 1.4);
    VertexSet s = random_subset(rng, n);
    CHECK(interval_cc(g, s) == oracle_interval_cc(g, s));
  }
}

TEST_CASE("hull_cc steps and witnesses") {
  SUBCASE("cycle missing one vertex") {
    for (int n = 3; n <= 6; ++n) {
      Multigraph c = cycle_graph(n);
      VertexSet s = VertexSet::full(n);
      s.erase(n - 1);
      ContaminationTrace tr = hull_cc(c, s);
      CHECK(tr.hull == VertexSet::full(n));
      CHECK(tr.step[n - 1] == 1);
    }
  }
  SUBCASE("cycle missing two vertices stays put") {
    Multigraph c = cycle_graph(5);
    VertexSet s = VertexSet::of(5, {0, 1, 2});
    CHECK(hull_cc(c, s).hull == s);
  }
  SUBCASE("gk hull set") {
    Multigraph g = make_gk(3);
    ContaminationTrace tr = hull_cc(g, VertexSet::of(6, {0, 1}));
    CHECK(tr.hull == VertexSet::full(6));
  }
  SUBCASE("witnesses are genuine cycles with earlier steps") {
    Rng rng(31);
    for (int trial = 0; trial < 120; ++trial) {
      int n = pick(rng, 2, 10);
      Multigraph g = random_multigraph(rng, n, 1.5);
      VertexSet s = random_subset(rng, n, 0.4);
      ContaminationTrace tr = hull_cc(g, s);
      for (int v = 0; v < n; ++v) {
        if (tr.step[v] <= 0) continue;
        const auto& cyc = tr.witness[v];
        REQUIRE(is_genuine_cycle(g, cyc));
        CHECK(cyc[0] == v);
        for (size_t i = 1; i < cyc.size(); ++i) {
          CHECK(tr.step[cyc[i]] >= 0);
          CHECK(tr.step[cyc[i]] < tr.step[v]);
        }
      }
      CHECK(tr.hull == oracle_hull_cc(g, s));
    }
  }
  SUBCASE("steps follow the synchronous semantics") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
      int n = pick(rng, 2, 9);
      Multigraph g = random_multigraph(rng, n, 1.4);
      VertexSet s = random_subset(rng, n, 0.4);
      ContaminationTrace tr = hull_cc(g, s);
      // round k of the synchronous iteration = vertices with step k
      VertexSet cur = s;
      int k = 0;
      while (true) {
        VertexSet next = interval_cc(g, cur);
        ++k;
        for (int v = 0; v < n; ++v)
          if (next.contains(v) && !cur.contains(v)) CHECK(tr.step[v] == k);
        if (next == cur) break;
        cur = next;
      }
    }
  }
}

TEST_CASE("convexity predicates") {
  Multigraph g33 = make_grid(3, 3);
  VertexSet row(9);
  for (int j = 0; j < 3; ++j) row.insert(0 * 3 + j);
  CHECK(is_coconvex_cc(g33, row));

  Multigraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(is_coconvex_cc(star, VertexSet::of(4, {0})));

  Multigraph k4 = complete_graph(4);
  CHECK(is_convex_cc(k4, VertexSet::full(4)));
  CHECK(is_hull_set(k4, VertexSet::of(4, {1, 3})));

  Multigraph g23 = make_grid(2, 3);
  VertexSet first_row_col(6);
  first_row_col.insert(0);
  first_row_col.insert(1);
  first_row_col.insert(2);
  first_row_col.insert(3);  // (1,0)
  CHECK(is_hull_set(g23, first_row_col));

  CHECK_FALSE(is_hull_set(cycle_graph(4), VertexSet::of(4, {0, 1})));
}

TEST_CASE("closure axioms on random graphs") {
  Rng rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    int n = pick(rng, 1, 12);
    Multigraph g = random_multigraph(rng, n, 1.4);
    VertexSet s = random_subset(rng, n, 0.35);
    VertexSet t = s | random_subset(rng, n, 0.2);
    VertexSet hs = hull_set_cc(g, s);
    VertexSet ht = hull_set_cc(g, t);
    CHECK(s.is_subset_of(hs));                   // extensive
    CHECK(hs.is_subset_of(ht));                  // monotone
    CHECK(hull_set_cc(g, hs) == hs);             // idempotent
    CHECK(is_convex_cc(g, hs));                  // hulls are convex
    VertexSet c1 = hull_set_cc(g, random_subset(rng, n, 0.3));
    VertexSet c2 = hull_set_cc(g, random_subset(rng, n, 0.3));
    CHECK(is_convex_cc(g, c1 & c2));             // intersection-closed
  }
}

TEST_CASE("grid perimeter") {
  CHECK(grid_perimeter(3, 3, VertexSet::of(9, {4})) == 4);
  CHECK(grid_perimeter(3, 3, VertexSet::full(9)) == 12);  // 2m + 2n
  CHECK(grid_perimeter(2, 5, VertexSet::full(10)) == 14);
  // two adjacent cells form a 1x2 box with 6 walls
  CHECK(grid_perimeter(3, 3, VertexSet::of(9, {4, 5})) == 6);
  CHECK(grid_perimeter(1, 1, VertexSet::of(1, {0})) == 4);

  SUBCASE("interval application never increases the perimeter") {
    Rng rng(808);
    for (int trial = 0; trial < 200; ++trial) {
      int m = pick(rng, 1, 5), n = pick(rng, 1, 5);
      Multigraph g = make_grid(m, n);
      VertexSet s = random_subset(rng, m * n, 0.45);
      VertexSet next = interval_cc(g, s);
      CHECK(grid_perimeter(m, n, next) <= grid_perimeter(m, n, s));
    }
  }
}

TEST_CASE("grid convex sets are exactly the boxed sets") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) {
      Multigraph g = make_grid(m, n);
      for (int mask = 0; mask < (1 << (m * n)); ++mask) {
        VertexSet s(m * n);
        for (int v = 0; v < m * n; ++v)
          if (mask >> v & 1) s.insert(v);
        CHECK(is_convex_cc(g, s) == is_boxed(m, n, s));
      }
    }
}
