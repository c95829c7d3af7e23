#include "cyconv/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cyconv/errors.hpp"

namespace cyconv {

using json = nlohmann::json;

void Multigraph::add_edge(int u, int v, int mult) {
  if (u == v) throw graph_error("loop edge rejected: " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw graph_error("edge endpoint out of range: " + std::to_string(u) +
                      " " + std::to_string(v));
  if (mult <= 0) return;
  auto bump = [&](int a, int b) {
    auto& row = adj_[a];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, 0));
    if (it != row.end() && it->first == b)
      it->second += mult;
    else
      row.insert(it, {b, mult});
  };
  bump(u, v);
  bump(v, u);
  m_ += mult;
}

void Multigraph::remove_edge(int u, int v, int mult) {
  auto drop = [&](int a, int b) -> int {
    auto& row = adj_[a];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, 0));
    if (it == row.end() || it->first != b) return 0;
    int removed = std::min(it->second, mult);
    it->second -= removed;
    if (it->second == 0) row.erase(it);
    return removed;
  };
  int removed = drop(u, v);
  if (removed) drop(v, u);
  m_ -= removed;
}

int Multigraph::multiplicity(int u, int v) const {
  const auto& row = adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0));
  return (it != row.end() && it->first == v) ? it->second : 0;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto [w, k] : adj_[v]) d += k;
  return d;
}

bool Multigraph::is_simple() const {
  for (int v = 0; v < n(); ++v)
    for (auto [w, k] : adj_[v])
      if (k > 1) return false;
  return true;
}

std::vector<std::pair<int, int>> Multigraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    for (auto [v, k] : adj_[u])
      if (u < v)
        for (int i = 0; i < k; ++i) out.emplace_back(u, v);
  return out;
}

Multigraph Multigraph::induced(const VertexSet& keep,
                               std::vector<int>* old_ids) const {
  std::vector<int> ids = keep.to_vector();
  std::vector<int> remap(n(), -1);
  for (size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = int(i);
  Multigraph h(int(ids.size()));
  for (int u : ids)
    for (auto [v, k] : adj_[u])
      if (u < v && remap[v] >= 0) h.add_edge(remap[u], remap[v], k);
  if (old_ids) *old_ids = std::move(ids);
  return h;
}

// --- parsing ------------------------------------------------------------

static Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw graph_error("graph json needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_number_integer() || j["vertices"].get<int>() < 0)
    throw graph_error("\"vertices\" must be a nonnegative integer");
  Multigraph g(j["vertices"].get<int>());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw graph_error("each edge must be a pair [u, v]");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

Multigraph parse_graph(const std::string& text) {
  size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw graph_error("empty graph input");
  if (text[pos] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw graph_error("malformed graph json");
    return graph_from_json(j);
  }
  // text edge list: first data line is n, then "u v" per line
  std::istringstream in(text);
  std::string line;
  std::optional<Multigraph> g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    if (!g) {
      int n;
      if (ls >> n) {
        if (n < 0) throw graph_error("vertex count must be nonnegative");
        int extra;
        if (ls >> extra)
          throw graph_error("line 1 must contain only the vertex count");
        g.emplace(n);
      }
      continue;
    }
    int u, v;
    if (ls >> u) {
      if (!(ls >> v))
        throw graph_error("line " + std::to_string(lineno) +
                          ": expected \"u v\"");
      g->add_edge(u, v);
    }
  }
  if (!g) throw graph_error("missing vertex count line");
  return *g;
}

std::string graph_to_json(const Multigraph& g) {
  json j;
  j["vertices"] = g.n();
  j["edges"] = json::array();
  for (auto [u, v] : g.edge_list()) j["edges"].push_back({u, v});
  return j.dump();
}

// --- connectivity and blocks ---------------------------------------------

std::vector<VertexSet> components(const Multigraph& g) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back(n);
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].insert(u);
      for (auto [v, k] : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
  }
  return out;  // discovery from ascending ids => ordered by smallest member
}

namespace {

// Edge-instance expansion so the lowpoint algorithm sees parallel copies as
// distinct edges (a double edge must close a 2-connected block).
struct EdgeInstances {
  std::vector<std::pair<int, int>> ends;         // instance -> (u, v)
  std::vector<std::vector<std::pair<int, int>>> inc;  // v -> (other, instance)
};

EdgeInstances expand_edges(const Multigraph& g) {
  EdgeInstances e;
  e.inc.resize(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (auto [v, k] : g.neighbors(u)) {
      if (u > v) continue;
      for (int i = 0; i < k; ++i) {
        int id = int(e.ends.size());
        e.ends.emplace_back(u, v);
        e.inc[u].emplace_back(v, id);
        e.inc[v].emplace_back(u, id);
      }
    }
  return e;
}

}  // namespace

BlockCutTree block_cut_tree(const Multigraph& g) {
  int n = g.n();
  EdgeInstances edges = expand_edges(g);
  BlockCutTree bct;
  bct.cut_vertices = VertexSet(n);

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  // iterative DFS frame: vertex, incident-edge cursor, parent edge instance
  struct Frame {
    int v;
    size_t cursor;
    int parent_edge;
  };

  auto pop_block = [&](int until_edge) {
    VertexSet blk(n);
    int edge_count = 0;
    while (true) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      blk.insert(edges.ends[e].first);
      blk.insert(edges.ends[e].second);
      ++edge_count;
      if (e == until_edge) break;
    }
    bct.blocks.push_back(std::move(blk));
    bct.block_edge_count.push_back(edge_count);
  };

  std::vector<int> child_count(n, 0);
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      // isolated vertex: its own block
      disc[root] = timer++;
      VertexSet blk(n);
      blk.insert(root);
      bct.blocks.push_back(std::move(blk));
      bct.block_edge_count.push_back(0);
      continue;
    }
    std::vector<Frame> st;
    disc[root] = low[root] = timer++;
    st.push_back({root, 0, -1});
    while (!st.empty()) {
      Frame& f = st.back();
      int u = f.v;
      if (f.cursor < edges.inc[u].size()) {
        auto [w, eid] = edges.inc[u][f.cursor++];
        if (eid == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(eid);
          disc[w] = low[w] = timer++;
          if (u == root) ++child_count[root];
          st.push_back({w, 0, eid});
        } else if (disc[w] < disc[u]) {
          edge_stack.push_back(eid);
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) {
            // p closes a block; it is a cut vertex unless it is the root
            // with a single DFS child
            pop_block(f.parent_edge);
            if (p != root || child_count[root] > 1) bct.cut_vertices.insert(p);
          }
        }
      }
    }
  }

  // deterministic block order: by (smallest member, block as a vector)
  std::vector<int> order(bct.blocks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::vector<std::vector<int>> as_vec(bct.blocks.size());
  for (size_t i = 0; i < bct.blocks.size(); ++i)
    as_vec[i] = bct.blocks[i].to_vector();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return as_vec[a] < as_vec[b]; });
  std::vector<VertexSet> blocks;
  std::vector<int> ecount;
  for (int i : order) {
    blocks.push_back(std::move(bct.blocks[i]));
    ecount.push_back(bct.block_edge_count[i]);
  }
  bct.blocks = std::move(blocks);
  bct.block_edge_count = std::move(ecount);

  for (size_t b = 0; b < bct.blocks.size(); ++b)
    for (int v : bct.blocks[b].to_vector())
      if (bct.cut_vertices.contains(v)) bct.tree_edges.emplace_back(int(b), v);
  return bct;
}

VertexSet vertices_on_cycles(const Multigraph& g) {
  BlockCutTree bct = block_cut_tree(g);
  VertexSet out(g.n());
  for (size_t b = 0; b < bct.blocks.size(); ++b)
    if (bct.block_edge_count[b] >= 2) out |= bct.blocks[b];
  return out;
}

bool vertex_on_cycle(const Multigraph& g, int v) {
  return vertices_on_cycles(g).contains(v);
}

bool is_forest(const Multigraph& g) {
  return vertices_on_cycles(g).empty();
}

ChordalityCheck is_chordal(const Multigraph& g) {
  ChordalityCheck res;
  res.simple = g.is_simple();
  if (!res.simple) return res;
  int n = g.n();
  if (n == 0) {
    res.chordal = true;
    return res;
  }

  // maximum cardinality search, ties by smallest id
  std::vector<int> weight(n, 0), order;
  std::vector<bool> taken(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!taken[v] && (best < 0 || weight[v] > weight[best])) best = v;
    taken[best] = true;
    order.push_back(best);
    for (auto [w, k] : g.neighbors(best))
      if (!taken[w]) ++weight[w];
  }
  std::reverse(order.begin(), order.end());  // elimination order
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // verify: for each v, its later neighbors must form a clique; it is
  // enough to check the earliest later neighbor against the rest
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int pivot = -1;
    for (auto [w, k] : g.neighbors(v))
      if (pos[w] > i && (pivot < 0 || pos[w] < pos[pivot])) pivot = w;
    if (pivot < 0) continue;
    for (auto [w, k] : g.neighbors(v))
      if (pos[w] > pos[pivot] && !g.adjacent(pivot, w)) return res;
  }
  res.chordal = true;
  res.elimination_order = std::move(order);
  return res;
}

namespace {

std::optional<GridMatch> try_grid_from(const Multigraph& g, int corner,
                                       int first, int second) {
  int n = g.n();
  // BFS distances from the corner; in a grid dist(i,j) = i + j
  std::vector<int> dist(n, -1);
  dist[corner] = 0;
  std::vector<int> bfs{corner};
  for (size_t h = 0; h < bfs.size(); ++h)
    for (auto [w, k] : g.neighbors(bfs[h]))
      if (dist[w] < 0) {
        dist[w] = dist[bfs[h]] + 1;
        bfs.push_back(w);
      }
  if (int(bfs.size()) != n) return std::nullopt;

  std::vector<std::pair<int, int>> coord(n, {-1, -1});
  std::vector<bool> placed(n, false);
  auto place = [&](int v, int i, int j) {
    coord[v] = {i, j};
    placed[v] = true;
  };
  place(corner, 0, 0);

  // row 0: walk via vertices whose only shorter neighbor is the previous
  // row vertex; column 0 symmetric
  auto walk = [&](int start, bool as_row) -> int {
    int prev = corner, cur = start, idx = 1;
    while (cur >= 0) {
      if (placed[cur]) return -1;
      place(cur, as_row ? 0 : idx, as_row ? idx : 0);
      int next = -1;
      for (auto [w, k] : g.neighbors(cur)) {
        if (w == prev || dist[w] != dist[cur] + 1) continue;
        // w continues the boundary iff cur is its unique shorter neighbor
        int shorter = 0;
        for (auto [x, kx] : g.neighbors(w))
          if (dist[x] == dist[w] - 1) ++shorter;
        if (shorter == 1) {
          if (next >= 0) return -1;  // ambiguous, not a grid boundary
          next = w;
        }
      }
      prev = cur;
      cur = next;
      ++idx;
    }
    return idx;  // length of the walk including the corner
  };

  int cols = 1, rows = 1;
  if (first >= 0) {
    cols = walk(first, true);
    if (cols < 0) return std::nullopt;
  }
  if (second >= 0) {
    rows = walk(second, false);
    if (rows < 0) return std::nullopt;
  }
  if (rows * cols != n) return std::nullopt;

  // interior: (i,j) is the common new neighbor of (i-1,j) and (i,j-1)
  std::vector<std::vector<int>> at(rows, std::vector<int>(cols, -1));
  for (int v = 0; v < n; ++v)
    if (placed[v]) {
      auto [i, j] = coord[v];
      if (at[i][j] >= 0) return std::nullopt;
      at[i][j] = v;
    }
  for (int i = 1; i < rows; ++i)
    for (int j = 1; j < cols; ++j) {
      int a = at[i - 1][j], b = at[i][j - 1];
      if (a < 0 || b < 0) return std::nullopt;
      int found = -1;
      for (auto [w, k] : g.neighbors(a)) {
        if (placed[w] || !g.adjacent(w, b)) continue;
        if (found >= 0) return std::nullopt;
        found = w;
      }
      if (found < 0) return std::nullopt;
      place(found, i, j);
      at[i][j] = found;
    }
  for (int v = 0; v < n; ++v)
    if (!placed[v]) return std::nullopt;

  // full verification against the grid edge set
  if (g.m() != rows * (cols - 1) + cols * (rows - 1)) return std::nullopt;
  for (int v = 0; v < n; ++v)
    for (auto [w, k] : g.neighbors(v)) {
      if (k != 1) return std::nullopt;
      int di = std::abs(coord[v].first - coord[w].first);
      int dj = std::abs(coord[v].second - coord[w].second);
      if (di + dj != 1) return std::nullopt;
    }
  GridMatch match;
  match.rows = rows;
  match.cols = cols;
  match.coords = std::move(coord);
  return match;
}

}  // namespace

std::optional<GridMatch> detect_grid(const Multigraph& g) {
  int n = g.n();
  if (n == 0) return std::nullopt;
  if (!g.is_simple()) return std::nullopt;
  if (n == 1) {
    if (g.m() != 0) return std::nullopt;
    return GridMatch{1, 1, {{0, 0}}};
  }
  for (int corner = 0; corner < n; ++corner) {
    int d = g.degree(corner);
    if (d == 0 || d > 2) continue;
    std::vector<int> nb;
    for (auto [w, k] : g.neighbors(corner)) nb.push_back(w);
    if (d == 1) {
      if (auto m = try_grid_from(g, corner, nb[0], -1)) return m;
    } else {
      if (auto m = try_grid_from(g, corner, nb[0], nb[1])) return m;
      if (auto m = try_grid_from(g, corner, nb[1], nb[0])) return m;
    }
  }
  return std::nullopt;
}

// --- generators -----------------------------------------------------------

Multigraph make_grid(int m, int n) {
  if (m < 1 || n < 1) throw graph_error("grid dimensions must be positive");
  Multigraph g(m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) g.add_edge(i * n + j, i * n + j + 1);
      if (i + 1 < m) g.add_edge(i * n + j, (i + 1) * n + j);
    }
  return g;
}

Multigraph make_gk(int k) {
  if (k < 2) throw graph_error("make_gk needs k >= 2");
  Multigraph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);          // u-cycle (double edge when k = 2)
    g.add_edge(k + i, k + (i + 1) % k);  // v-cycle
    g.add_edge(i, k + i, 2);             // rung
  }
  return g;
}

Multigraph make_spider(SpiderKind kind, int k, const Multigraph& head) {
  if (k < 2) throw graph_error("spider needs |K| = |S| >= 2");
  if (k == 2) kind = SpiderKind::Thin;  // fat and thin coincide
  int r = head.n();
  Multigraph g(2 * k + r);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  for (int i = 0; i < k; ++i) {
    if (kind == SpiderKind::Thin) {
      g.add_edge(k + i, i);
    } else {
      for (int j = 0; j < k; ++j)
        if (j != i) g.add_edge(k + i, j);
    }
  }
  for (int h = 0; h < r; ++h)
    for (int i = 0; i < k; ++i) g.add_edge(2 * k + h, i);
  for (auto [u, v] : head.edge_list()) g.add_edge(2 * k + u, 2 * k + v);
  return g;
}

Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Multigraph cycle_graph(int n) {
  if (n < 2) throw graph_error("cycle needs >= 2 vertices");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph path_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph complement(const Multigraph& g) {
  Multigraph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

}  // namespace cyconv
