#include "cyconv/reduce4.hpp"

#include "cyconv/convexity.hpp"
#include "cyconv/errors.hpp"
#include "cyconv/exact.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/plane_support.hpp"

using namespace cyconv;
using namespace cyconv::testing;

namespace {

Multigraph two_vertex_quad() {
  Multigraph g(2);
  g.add_edge(0, 1, 4);
  return g;
}

// replay the recorded script and check regularity and looplessness of every
// intermediate graph
void check_script(const Multigraph& g, const ReductionScript& script) {
  Multigraph cur(script.universe);
  for (auto [u, v] : g.edge_list()) cur.add_edge(u, v);
  VertexSet alive(script.universe);
  for (int v = 0; v < g.n(); ++v) alive.insert(v);
  for (const ReductionStep& step : script.steps) {
    cur = replay_step(cur, step, script.universe);
    for (int v : step.removed) alive.erase(v);
    if (step.added_vertex >= 0) alive.insert(step.added_vertex);
    for (int v : alive.to_vector()) CHECK(cur.degree(v) == 4);
  }
  std::vector<int> alive_end = alive.to_vector();
  CHECK(alive_end == script.terminal_vertices);
}

}  // namespace

TEST_CASE("reduce on knowns") {
  SUBCASE("the two-vertex graph is terminal") {
    ReductionScript s = reduce(two_vertex_quad());
    CHECK(s.steps.empty());
    CHECK(s.terminal_kind == TerminalKind::TwoVertexQuad);
  }
  SUBCASE("gk(3): rung path first, then the all-double cycle") {
    ReductionScript s = reduce(make_gk(3));
    REQUIRE(s.steps.size() == 2);
    CHECK(s.steps[0].kind == OpKind::M2Path);
    CHECK(s.steps[1].kind == OpKind::M2Cycle);
    CHECK(s.terminal_kind == TerminalKind::Empty);
    check_script(make_gk(3), s);
  }
  SUBCASE("k5 starts with a T step") {
    ReductionScript s = reduce(complete_graph(5));
    REQUIRE(!s.steps.empty());
    CHECK(s.steps[0].kind == OpKind::T);
    CHECK(s.steps[0].x == 0);
    CHECK(s.steps[0].y == 1);
    CHECK(s.steps[0].z == 2);
    check_script(complete_graph(5), s);
  }
  SUBCASE("rejects non-4-regular input") {
    CHECK_THROWS_AS(reduce(cycle_graph(4)), graph_error);
  }
}

TEST_CASE("script json round trip and replay") {
  for (const Multigraph& g : {make_gk(4), complete_graph(5)}) {
    ReductionScript s = reduce(g);
    ReductionScript back = script_from_json(script_to_json(s));
    CHECK(back.steps.size() == s.steps.size());
    CHECK(back.terminal_vertices == s.terminal_vertices);
    CHECK(back.universe == s.universe);
    check_script(g, back);
  }
}

TEST_CASE("lifting on knowns") {
  SUBCASE("two-vertex terminal lifts its own seed") {
    Multigraph g = two_vertex_quad();
    ReductionScript s = reduce(g);
    VertexSet w = lift_hull_set(g, s, {0});
    CHECK(w == VertexSet::of(2, {0}));
  }
  SUBCASE("gk(3) lifts to a hull set of size 2") {
    Multigraph g = make_gk(3);
    ReductionScript s = reduce(g);
    VertexSet w = lift_hull_set(g, s, {});
    CHECK(w.count() == 2);
    CHECK(is_hull_set(g, w));
  }
  SUBCASE("k5 lifts to size <= 2") {
    UpperBoundResult res = hn_upper_4regular(complete_graph(5));
    CHECK(res.bound <= 2);
    CHECK(is_hull_set(complete_graph(5), res.witness));
    CHECK(brute_force_hn_cc(complete_graph(5)).hn == 2);
  }
  SUBCASE("bad terminal hull rejected") {
    Multigraph g = make_gk(3);
    ReductionScript s = reduce(g);
    // gk(3) ends empty, so any nonempty terminal hull names a dead vertex
    CHECK_THROWS(lift_hull_set(g, s, {99}));
  }
}

TEST_CASE("per-step hull arithmetic on random 4-regular multigraphs") {
  Rng rng(4444);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    int n = 2 * pick(rng, 2, 5);  // even order
    Multigraph g = random_4regular(rng, n);
    ReductionScript script = reduce(g);
    // rebuild the snapshots to compare hull numbers across each step
    Multigraph cur(script.universe);
    for (auto [u, v] : g.edge_list()) cur.add_edge(u, v);
    VertexSet alive(script.universe);
    for (int v = 0; v < g.n(); ++v) alive.insert(v);
    for (const ReductionStep& step : script.steps) {
      Multigraph pre = cur.induced(alive);
      cur = replay_step(cur, step, script.universe);
      for (int v : step.removed) alive.erase(v);
      if (step.added_vertex >= 0) alive.insert(step.added_vertex);
      Multigraph post = cur.induced(alive);
      if (pre.n() > 10) continue;
      CHECK(brute_force_hn_cc(pre).hn <= brute_force_hn_cc(post).hn + 1);
    }
    ++done;
  }
  CHECK(done >= 40);
}

TEST_CASE("planar inputs reach a trivial terminal with a half-size witness") {
  std::vector<Multigraph> inputs;
  for (int k = 2; k <= 8; ++k) inputs.push_back(make_gk(k));
  inputs.push_back(medial(cycle_plane(3)).underlying);
  inputs.push_back(medial(cycle_plane(6)).underlying);
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 4; ++n)
      inputs.push_back(medial(grid_plane(m, n)).underlying);
  inputs.push_back(two_vertex_quad());

  for (const Multigraph& g : inputs) {
    ReductionScript script = reduce(g);
    CHECK(script.terminal_kind != TerminalKind::Nontrivial);
    UpperBoundResult res = hn_upper_4regular(g);
    CHECK(res.bound <= (g.n() + 1) / 2);
    CHECK(is_hull_set(g, res.witness));
  }
}

TEST_CASE("gk hull numbers are exactly k-1") {
  for (int k = 2; k <= 6; ++k) {
    Multigraph g = make_gk(k);
    CHECK(solve_cc(g).hn == k - 1);
    UpperBoundResult res = hn_upper_4regular(g);
    CHECK(res.bound >= k - 1);
    CHECK(res.bound <= k);
  }
}

TEST_CASE("lifted witnesses are valid on random 4-regular multigraphs") {
  Rng rng(5555);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 * pick(rng, 2, 5);
    Multigraph g = random_4regular(rng, n);
    ReductionScript script = reduce(g);
    if (script.terminal_kind == TerminalKind::Nontrivial) continue;
    std::vector<int> seed;
    if (script.terminal_kind == TerminalKind::TwoVertexQuad)
      seed.push_back(script.terminal_vertices.front());
    VertexSet w = lift_hull_set(g, script, seed);
    CHECK(is_hull_set(g, w));
    CHECK(w.count() <= int(script.steps.size()) + int(seed.size()));
  }
}
