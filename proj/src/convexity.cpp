#include "cyconv/convexity.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "cyconv/errors.hpp"

namespace cyconv {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_subset(const Multigraph& g, const VertexSet& s) {
  if (s.universe_size() != g.n())
    throw graph_error("vertex set universe does not match graph order");
}

struct HullState {
  std::vector<int> step;
  // trigger edges (two contaminated endpoints, equal for a parallel edge)
  std::vector<std::pair<int, int>> trigger;
  VertexSet hull;
  int rounds = 0;
};

HullState run_hull(const Multigraph& g, const VertexSet& s) {
  check_subset(g, s);
  int n = g.n();
  HullState st{std::vector<int>(n, -1),
               std::vector<std::pair<int, int>>(n, {-1, -1}), VertexSet(n), 0};
  UnionFind uf(n);
  for (int v : s.to_vector()) {
    st.step[v] = 0;
    st.hull.insert(v);
  }
  for (int v : s.to_vector())
    for (auto [w, k] : g.neighbors(v))
      if (st.hull.contains(w)) uf.unite(v, w);

  // frontier of vertices adjacent to the hull, kept sorted and deduplicated
  std::vector<int> frontier;
  auto push_frontier = [&](int v) {
    if (!st.hull.contains(v)) frontier.push_back(v);
  };
  for (int v = 0; v < n; ++v)
    if (!st.hull.contains(v))
      for (auto [w, k] : g.neighbors(v))
        if (st.hull.contains(w)) {
          frontier.push_back(v);
          break;
        }

  std::map<int, int> per_root;      // component root -> edge endpoints
  std::map<int, int> first_touch;   // component root -> first neighbor seen
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()),
                   frontier.end());
    // synchronous round: decide all of this layer against the current hull
    std::vector<int> layer;
    for (int v : frontier) {
      if (st.hull.contains(v)) continue;
      per_root.clear();
      first_touch.clear();
      for (auto [w, k] : g.neighbors(v)) {
        if (!st.hull.contains(w)) continue;
        int r = uf.find(w);
        int& cnt = per_root[r];
        if (cnt == 0) first_touch[r] = w;
        cnt += k;
        if (cnt >= 2) {
          if (st.trigger[v].first < 0) {
            int a = first_touch[r];
            st.trigger[v] = (k >= 2 && cnt == k) ? std::make_pair(w, w)
                                                 : std::make_pair(a, w);
          }
        }
      }
      if (st.trigger[v].first >= 0) layer.push_back(v);
    }
    if (layer.empty()) break;
    ++st.rounds;
    for (int v : layer) {
      st.step[v] = st.rounds;
      st.hull.insert(v);
    }
    for (int v : layer)
      for (auto [w, k] : g.neighbors(v))
        if (st.hull.contains(w)) uf.unite(v, w);
    // vertices that failed this round stay relevant: a later merge of
    // components can make their edge counts add up
    frontier.clear();
    for (int v = 0; v < n; ++v)
      if (!st.hull.contains(v))
        for (auto [w, k] : g.neighbors(v))
          if (st.hull.contains(w)) {
            push_frontier(v);
            break;
          }
  }
  return st;
}

// Cycle through v: [v, a, ..., b] where a, b are the trigger endpoints and
// the inner path runs inside the hull restricted to steps < step[v].
std::vector<int> build_witness(const Multigraph& g, const HullState& st,
                               int v) {
  auto [a, b] = st.trigger[v];
  if (a == b) return {v, a};  // parallel edge, 2-cycle
  int n = g.n();
  int bound = st.step[v];
  std::vector<int> prev(n, -2);
  std::queue<int> q;
  prev[a] = -1;
  q.push(a);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == b) break;
    for (auto [w, k] : g.neighbors(u)) {
      if (prev[w] != -2 || w == v) continue;
      if (st.step[w] < 0 || st.step[w] >= bound) continue;
      prev[w] = u;
      q.push(w);
    }
  }
  std::vector<int> path;
  for (int u = b; u != -1; u = prev[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  std::vector<int> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace

VertexSet interval_cc(const Multigraph& g, const VertexSet& s) {
  check_subset(g, s);
  int n = g.n();
  UnionFind uf(n);
  for (int v : s.to_vector())
    for (auto [w, k] : g.neighbors(v))
      if (w > v && s.contains(w)) uf.unite(v, w);
  VertexSet out = s;
  std::map<int, int> per_root;
  for (int v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    per_root.clear();
    for (auto [w, k] : g.neighbors(v)) {
      if (!s.contains(w)) continue;
      per_root[uf.find(w)] += k;
    }
    for (auto [r, c] : per_root)
      if (c >= 2) {
        out.insert(v);
        break;
      }
  }
  return out;
}

ContaminationTrace hull_cc(const Multigraph& g, const VertexSet& s) {
  HullState st = run_hull(g, s);
  ContaminationTrace tr;
  tr.step = st.step;
  tr.hull = st.hull;
  tr.witness.resize(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (st.step[v] > 0) tr.witness[v] = build_witness(g, st, v);
  return tr;
}

VertexSet hull_set_cc(const Multigraph& g, const VertexSet& s) {
  return run_hull(g, s).hull;
}

bool is_convex_cc(const Multigraph& g, const VertexSet& s) {
  return interval_cc(g, s) == s;
}

bool is_coconvex_cc(const Multigraph& g, const VertexSet& s) {
  return is_convex_cc(g, s.complement());
}

bool is_hull_set(const Multigraph& g, const VertexSet& s) {
  return hull_set_cc(g, s) == VertexSet::full(g.n());
}

int grid_perimeter(int m, int n, const VertexSet& s) {
  if (s.universe_size() != m * n)
    throw graph_error("set universe does not match grid size");
  int walls = 4 * s.count();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (!s.contains(i * n + j)) continue;
      if (j + 1 < n && s.contains(i * n + j + 1)) walls -= 2;
      if (i + 1 < m && s.contains((i + 1) * n + j)) walls -= 2;
    }
  return walls;
}

}  // namespace cyconv
