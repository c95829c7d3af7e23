#include "cyconv/plane.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <nlohmann/json.hpp>

#include "cyconv/errors.hpp"

namespace cyconv {

using json = nlohmann::json;

namespace {

void trace_all_faces(PlaneGraph& pg) {
  int d_total = pg.num_darts();
  // position of each dart inside its owner's rotation
  std::vector<int> pos(d_total, -1);
  for (int v = 0; v < pg.n(); ++v)
    for (size_t i = 0; i < pg.rotation[v].size(); ++i)
      pos[pg.rotation[v][i]] = int(i);
  auto next_dart = [&](int d) {
    int t = pg.twin[d];
    int v = pg.dart_owner[t];
    const auto& rot = pg.rotation[v];
    return rot[(pos[t] + 1) % rot.size()];
  };
  std::vector<int> face_of(d_total, -1);
  for (int d0 = 0; d0 < d_total; ++d0) {
    if (face_of[d0] >= 0) continue;
    int f = pg.num_faces();
    pg.face_darts.emplace_back();
    int d = d0;
    do {
      face_of[d] = f;
      pg.face_darts[f].push_back(d);
      d = next_dart(d);
    } while (d != d0);
  }
  pg.face_vertices.resize(pg.num_faces());
  for (int f = 0; f < pg.num_faces(); ++f) {
    auto& vs = pg.face_vertices[f];
    for (int d : pg.face_darts[f]) vs.push_back(pg.dart_owner[d]);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
}

}  // namespace

PlaneGraph make_plane_graph(int n, std::vector<std::vector<int>> rotations,
                            const std::vector<std::pair<int, int>>& twins) {
  if (int(rotations.size()) != n)
    throw graph_error("rotation system must list every vertex");
  int d_total = 0;
  for (const auto& rot : rotations) d_total += int(rot.size());
  if (d_total != int(twins.size()) * 2)
    throw graph_error("twin list does not match dart count");

  PlaneGraph pg;
  pg.twin.assign(d_total, -1);
  pg.dart_owner.assign(d_total, -1);
  for (int v = 0; v < n; ++v) {
    if (rotations[v].empty())
      throw graph_error("isolated vertex in rotation system");
    for (int d : rotations[v]) {
      if (d < 0 || d >= d_total || pg.dart_owner[d] != -1)
        throw graph_error("darts must each appear exactly once");
      pg.dart_owner[d] = v;
    }
  }
  for (auto [a, b] : twins) {
    if (a < 0 || b < 0 || a >= d_total || b >= d_total || a == b ||
        pg.twin[a] != -1 || pg.twin[b] != -1)
      throw graph_error("twins must form a perfect matching on the darts");
    pg.twin[a] = b;
    pg.twin[b] = a;
  }
  pg.rotation = std::move(rotations);

  pg.underlying = Multigraph(n);
  for (int d = 0; d < d_total; ++d) {
    int u = pg.dart_owner[d], v = pg.dart_owner[pg.twin[d]];
    if (u == v) throw graph_error("loop edge in rotation system");
    if (d < pg.twin[d]) pg.underlying.add_edge(u, v);
  }

  trace_all_faces(pg);
  int e = pg.underlying.m();
  int c = int(components(pg.underlying).size());
  if (n - e + pg.num_faces() != 1 + c)
    throw graph_error("rotation system is not planar (Euler check failed)");
  return pg;
}

PlaneGraph parse_rotation_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw graph_error("malformed rotation json");
  if (!j.contains("vertices") || !j.contains("rotations") ||
      !j.contains("twins"))
    throw graph_error(
        "rotation json needs \"vertices\", \"rotations\" and \"twins\"");
  int n = j["vertices"].get<int>();
  std::vector<std::vector<int>> rotations;
  for (const auto& r : j["rotations"])
    rotations.push_back(r.get<std::vector<int>>());
  std::vector<std::pair<int, int>> twins;
  for (const auto& t : j["twins"]) {
    if (!t.is_array() || t.size() != 2)
      throw graph_error("each twin entry must be a pair");
    twins.emplace_back(t[0].get<int>(), t[1].get<int>());
  }
  return make_plane_graph(n, std::move(rotations), twins);
}

std::string rotation_to_json(const PlaneGraph& pg) {
  json j;
  j["vertices"] = pg.n();
  j["rotations"] = pg.rotation;
  j["twins"] = json::array();
  for (int d = 0; d < pg.num_darts(); ++d)
    if (d < pg.twin[d]) j["twins"].push_back({d, pg.twin[d]});
  return j.dump();
}

VertexSet interval_fc(const PlaneGraph& pg, const VertexSet& s) {
  if (s.universe_size() != pg.n())
    throw graph_error("vertex set universe does not match plane graph");
  VertexSet out = s;
  for (const auto& vs : pg.face_vertices) {
    int missing = -1, missing_count = 0;
    for (int v : vs)
      if (!s.contains(v)) {
        missing = v;
        if (++missing_count > 1) break;
      }
    if (missing_count == 1) out.insert(missing);
  }
  return out;
}

namespace {

FaceTrace run_hull_fc(const PlaneGraph& pg, const VertexSet& s) {
  FaceTrace tr;
  tr.step.assign(pg.n(), -1);
  tr.witness_face.assign(pg.n(), -1);
  tr.hull = s;
  for (int v : s.to_vector()) tr.step[v] = 0;
  int round = 0;
  while (true) {
    // synchronous: all faces judged against the same hull
    std::vector<std::pair<int, int>> layer;  // (vertex, face)
    for (int f = 0; f < pg.num_faces(); ++f) {
      int missing = -1, missing_count = 0;
      for (int v : pg.face_vertices[f])
        if (!tr.hull.contains(v)) {
          missing = v;
          if (++missing_count > 1) break;
        }
      if (missing_count == 1) layer.emplace_back(missing, f);
    }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end(),
                            [](auto a, auto b) { return a.first == b.first; }),
                layer.end());
    if (layer.empty()) return tr;
    ++round;
    for (auto [v, f] : layer) {
      tr.hull.insert(v);
      tr.step[v] = round;
      tr.witness_face[v] = f;
    }
  }
}

}  // namespace

FaceTrace hull_fc(const PlaneGraph& pg, const VertexSet& s) {
  return run_hull_fc(pg, s);
}

VertexSet hull_set_fc(const PlaneGraph& pg, const VertexSet& s) {
  return run_hull_fc(pg, s).hull;
}

bool is_hull_set_fc(const PlaneGraph& pg, const VertexSet& s) {
  return hull_set_fc(pg, s) == VertexSet::full(pg.n());
}

SolveReport hn_fc_exact(const PlaneGraph& pg, const SolveOptions& opts) {
  int n = pg.n();
  VertexSet forced(n);
  VertexSet all = VertexSet::full(n);
  for (int v = 0; v < n; ++v) {
    VertexSet rest = all;
    rest.erase(v);
    if (!interval_fc(pg, rest).contains(v)) forced.insert(v);
  }
  HullFn hull = [&pg](const VertexSet& s) { return hull_set_fc(pg, s); };
  return solve_with_hull(n, hull, std::max(1, forced.count()), forced, opts);
}

// --- dynamic percolation ---------------------------------------------------

namespace {

// Mutable dart structure for the removal process. Rotations of surviving
// vertices never change; only twins are rewired when a vertex is smoothed
// away.
struct PercState {
  std::map<int, std::array<int, 4>> rot;  // alive vertex -> 4 darts, cyclic
  std::map<int, int> twin;
  std::map<int, int> owner;

  std::vector<std::vector<int>> faces() const {
    std::map<int, int> pos;
    for (const auto& [v, r] : rot)
      for (int i = 0; i < 4; ++i) pos[r[i]] = i;
    std::vector<std::vector<int>> out;
    std::map<int, bool> seen;
    for (const auto& [d0, t] : twin) {
      if (seen[d0]) continue;
      std::vector<int> cyc;
      int d = d0;
      do {
        seen[d] = true;
        cyc.push_back(d);
        int tw = twin.at(d);
        int v = owner.at(tw);
        d = rot.at(v)[(pos[tw] + 1) % 4];
      } while (d != d0);
      out.push_back(std::move(cyc));
    }
    return out;
  }
};

}  // namespace

PercolationResult dynamic_percolation(const PlaneGraph& pg,
                                      const VertexSet& s) {
  for (int v = 0; v < pg.n(); ++v)
    if (pg.underlying.degree(v) != 4)
      throw graph_error("dynamic percolation needs a 4-regular plane graph");
  if (s.universe_size() != pg.n())
    throw graph_error("vertex set universe does not match plane graph");

  PercState st;
  for (int v = 0; v < pg.n(); ++v) {
    std::array<int, 4> r{pg.rotation[v][0], pg.rotation[v][1],
                         pg.rotation[v][2], pg.rotation[v][3]};
    st.rot[v] = r;
    for (int d : r) st.owner[d] = v;
  }
  for (int d = 0; d < pg.num_darts(); ++d) st.twin[d] = pg.twin[d];

  PercolationResult res;
  VertexSet marked = s;
  while (true) {
    auto faces = st.faces();
    // trigger: lowest unmarked vertex that is the single unmarked vertex of
    // some face; among its faces, the first in trace order
    int pick_v = -1, pick_f = -1;
    for (int f = 0; f < int(faces.size()); ++f) {
      std::vector<int> vs;
      for (int d : faces[f]) vs.push_back(st.owner.at(d));
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      int missing = -1, cnt = 0;
      for (int v : vs)
        if (!marked.contains(v)) {
          missing = v;
          if (++cnt > 1) break;
        }
      if (cnt == 1 && (pick_v < 0 || missing < pick_v)) {
        pick_v = missing;
        pick_f = f;
      }
    }
    if (pick_v < 0) break;

    // locate the corner of pick_v inside the triggering face
    const auto& cyc = faces[pick_f];
    int corner_dart = -1;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int d = cyc[i];
      int entering = st.twin.at(cyc[(i + cyc.size() - 1) % cyc.size()]);
      if (st.owner.at(d) == pick_v) {
        corner_dart = entering;  // dart at pick_v; face sits before its succ
        break;
      }
    }
    if (corner_dart < 0) throw internal_error("trigger face lost its vertex");

    const auto r = st.rot.at(pick_v);
    int c = 0;
    while (r[c] != corner_dart) ++c;
    // face occupies the corner between r[c] and r[c+1]; smoothing joins the
    // two side corners so the face merges with the opposite one
    std::map<int, int> pair_at_v{{r[(c + 1) % 4], r[(c + 2) % 4]},
                                 {r[(c + 2) % 4], r[(c + 1) % 4]},
                                 {r[(c + 3) % 4], r[c]},
                                 {r[c], r[(c + 3) % 4]}};
    // rewire every external dart whose strand ran through pick_v
    for (int d : r) {
      int x = st.twin.at(d);
      if (st.owner.at(x) == pick_v) continue;  // handled from the other side
      int y = d;
      while (true) {
        int exit = pair_at_v.at(y);
        int land = st.twin.at(exit);
        if (st.owner.at(land) != pick_v) {
          st.twin[x] = land;
          st.twin[land] = x;
          break;
        }
        y = land;
      }
    }
    for (int d : r) {
      st.twin.erase(d);
      st.owner.erase(d);
    }
    st.rot.erase(pick_v);
    res.removal_order.push_back(pick_v);
    if (st.rot.empty()) break;
  }

  res.percolates = true;
  for (const auto& [v, r] : st.rot)
    if (!marked.contains(v)) res.percolates = false;
  return res;
}

}  // namespace cyconv
