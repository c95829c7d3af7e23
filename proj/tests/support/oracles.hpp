#pragma once

// Test-only oracles, deliberately independent of the library's
// implementation paths: the interval rule here literally searches for a
// cycle by path enumeration instead of counting edges into components.

#include <vector>

#include "cyconv/multigraph.hpp"
#include "cyconv/vertex_set.hpp"

namespace cyconv::testing {

// Is there a cycle through v inside g[allowed ∪ {v}]? Exhaustive simple
// path search; fine for the small graphs the oracle is used on.
inline bool on_cycle_within(const Multigraph& g, const VertexSet& allowed,
                            int v) {
  for (auto [u, k] : g.neighbors(v))
    if (allowed.contains(u) && k >= 2) return true;  // 2-cycle

  std::vector<int> stack;
  std::vector<bool> used(g.n(), false);
  bool found = false;
  auto dfs = [&](auto&& self, int cur) -> void {
    if (found) return;
    if (cur != v && g.adjacent(cur, v) && stack.size() >= 2) {
      found = true;
      return;
    }
    for (auto [w, k] : g.neighbors(cur)) {
      if (found) return;
      if (w == v || used[w] || !allowed.contains(w)) continue;
      used[w] = true;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      used[w] = false;
    }
  };
  for (auto [u, k] : g.neighbors(v)) {
    if (!allowed.contains(u) || found) continue;
    used[u] = true;
    stack.push_back(u);
    dfs(dfs, u);
    stack.pop_back();
    used[u] = false;
  }
  return found;
}

inline VertexSet oracle_interval_cc(const Multigraph& g, const VertexSet& s) {
  VertexSet out = s;
  for (int v = 0; v < g.n(); ++v)
    if (!s.contains(v) && on_cycle_within(g, s, v)) out.insert(v);
  return out;
}

inline VertexSet oracle_hull_cc(const Multigraph& g, const VertexSet& s) {
  VertexSet cur = s;
  while (true) {
    VertexSet next = oracle_interval_cc(g, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

// Grid subsets whose induced components all fill their bounding boxes.
inline bool is_boxed(int m, int n, const VertexSet& s) {
  Multigraph g = make_grid(m, n);
  VertexSet seen(g.n());
  for (int v0 = 0; v0 < g.n(); ++v0) {
    if (!s.contains(v0) || seen.contains(v0)) continue;
    std::vector<int> comp{v0};
    seen.insert(v0);
    for (size_t h = 0; h < comp.size(); ++h)
      for (auto [w, k] : g.neighbors(comp[h]))
        if (s.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          comp.push_back(w);
        }
    int ilo = m, ihi = -1, jlo = n, jhi = -1;
    for (int v : comp) {
      ilo = std::min(ilo, v / n);
      ihi = std::max(ihi, v / n);
      jlo = std::min(jlo, v % n);
      jhi = std::max(jhi, v % n);
    }
    if (int(comp.size()) != (ihi - ilo + 1) * (jhi - jlo + 1)) return false;
    for (int i = ilo; i <= ihi; ++i)
      for (int j = jlo; j <= jhi; ++j)
        if (!seen.contains(i * n + j)) return false;
  }
  return true;
}

// True iff the cycle visits distinct vertices, consecutive ones are
// adjacent, and a length-2 cycle uses a doubled edge.
inline bool is_genuine_cycle(const Multigraph& g,
                             const std::vector<int>& cycle) {
  if (cycle.size() < 2) return false;
  VertexSet seen(g.n());
  for (int v : cycle) {
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  if (cycle.size() == 2) return g.multiplicity(cycle[0], cycle[1]) >= 2;
  for (size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

}  // namespace cyconv::testing
