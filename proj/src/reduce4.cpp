#include "cyconv/reduce4.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cyconv/convexity.hpp"
#include "cyconv/errors.hpp"

namespace cyconv {

using json = nlohmann::json;

namespace {

// Working multigraph over the growing universe; only alive vertices appear.
struct WorkGraph {
  std::map<int, std::map<int, int>> adj;
  int next_id = 0;

  static WorkGraph from(const Multigraph& g) {
    WorkGraph w;
    w.next_id = g.n();
    for (int v = 0; v < g.n(); ++v) w.adj[v];
    for (auto [u, v] : g.edge_list()) {
      w.adj[u][v] += 1;
      w.adj[v][u] += 1;
    }
    return w;
  }

  int degree(int v) const {
    int d = 0;
    for (auto [w, k] : adj.at(v)) d += k;
    return d;
  }

  int mult(int u, int v) const {
    auto it = adj.at(u).find(v);
    return it == adj.at(u).end() ? 0 : it->second;
  }

  void add_edge(int u, int v, int k = 1) {
    if (u == v) throw internal_error("reduction tried to create a loop");
    adj[u][v] += k;
    adj[v][u] += k;
  }

  void remove_vertex(int v) {
    for (auto [w, k] : adj.at(v)) adj.at(w).erase(v);
    adj.erase(v);
  }

  void assert_4_regular() const {
    for (auto& [v, row] : adj)
      if (degree(v) != 4)
        throw internal_error("intermediate graph is not 4-regular");
  }

  // dense snapshot plus id maps
  Multigraph dense(std::vector<int>* ids_out) const {
    std::vector<int> ids;
    for (auto& [v, row] : adj) ids.push_back(v);
    std::map<int, int> to_dense;
    for (size_t i = 0; i < ids.size(); ++i) to_dense[ids[i]] = int(i);
    Multigraph g(int(ids.size()));
    for (auto& [v, row] : adj)
      for (auto [w, k] : row)
        if (v < w) g.add_edge(to_dense[v], to_dense[w], k);
    if (ids_out) *ids_out = std::move(ids);
    return g;
  }
};

// components of the subgraph formed by edges of multiplicity exactly two
std::vector<std::vector<int>> mult2_components(const WorkGraph& g) {
  std::map<int, std::vector<int>> h;  // vertex -> mult-2 neighbors
  for (auto& [v, row] : g.adj)
    for (auto [w, k] : row)
      if (k == 2) h[v].push_back(w);
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (auto& [v, nb] : h) {
    if (seen.count(v)) continue;
    std::vector<int> comp, stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : h[u])
        if (!seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // map iteration => ordered by smallest member
}

// the <= 2 outside-of-`inside` edge endpoints of v, by multiplicity
std::vector<int> outside_slots(const WorkGraph& g, int v,
                               const std::set<int>& inside) {
  std::vector<int> out;
  for (auto [w, k] : g.adj.at(v))
    if (!inside.count(w))
      for (int i = 0; i < k; ++i) out.push_back(w);
  return out;
}

bool apply_m4(WorkGraph& g, ReductionStep& step) {
  for (auto& [u, row] : g.adj)
    for (auto [v, k] : row) {
      if (k != 4 || v < u) continue;
      if (g.adj.size() == 2) return false;  // the terminal graph itself
      step.kind = OpKind::M4;
      step.removed = {u, v};
      step.designated = u;
      g.remove_vertex(v);
      g.remove_vertex(u);
      return true;
    }
  return false;
}

bool apply_m2(WorkGraph& g, ReductionStep& step) {
  for (const std::vector<int>& comp : mult2_components(g)) {
    std::set<int> inside(comp.begin(), comp.end());
    std::vector<int> endpoints;  // vertices with exactly one mult-2 edge
    for (int v : comp) {
      int h_deg = 0;
      for (auto [w, k] : g.adj.at(v))
        if (k == 2 && inside.count(w)) ++h_deg;
      if (h_deg == 1) endpoints.push_back(v);
    }

    if (endpoints.empty()) {
      // cycle: a whole component of g disappears
      step.kind = OpKind::M2Cycle;
      step.removed = comp;
      step.designated = comp.front();
      for (int v : comp)
        for (auto [w, k] : g.adj.at(v))
          if (!inside.count(w))
            throw internal_error("mult-2 cycle is not a full component");
      for (int v : comp) g.remove_vertex(v);
      return true;
    }

    if (endpoints.size() != 2)
      throw internal_error("mult-2 path with an odd endpoint count");
    int u = endpoints[0], v = endpoints[1];
    auto us = outside_slots(g, u, inside);
    auto vs = outside_slots(g, v, inside);
    std::vector<std::pair<int, int>> added;
    if (us.size() == 2 && vs.size() == 2) {
      // x = x' would mean a multiplicity-2 edge leaving the component,
      // which contradicts how the component was built
      if (us[0] == us[1] || vs[0] == vs[1])
        throw internal_error("mult-2 path with a doubled outside slot");
      added = {{us[0], us[1]}, {vs[0], vs[1]}};
    } else if (us.size() == 1 && vs.size() == 1) {
      // the endpoints also carry a plain edge to each other; one new edge
      // restores regularity, unless it would be a loop
      if (us[0] == vs[0]) continue;  // blocked, try the next component
      added = {{us[0], vs[0]}};
    } else {
      throw internal_error("mult-2 path endpoints with unexpected slots");
    }
    step.kind = OpKind::M2Path;
    step.removed = comp;
    step.designated = u;
    step.added_edges = added;
    for (int a : comp) g.remove_vertex(a);
    for (auto [a, b] : added) g.add_edge(a, b);
    return true;
  }
  return false;
}

bool apply_m3(WorkGraph& g, ReductionStep& step) {
  for (auto& [u, row] : g.adj)
    for (auto [v, k] : row) {
      if (k != 3 || v < u) continue;
      int x = -1, y = -1;
      for (auto [w, kw] : g.adj.at(u))
        if (w != v) x = w;
      for (auto [w, kw] : g.adj.at(v))
        if (w != u) y = w;
      if (x < 0 || y < 0)
        throw internal_error("mult-3 edge without outside neighbors");
      step.kind = OpKind::M3;
      step.designated = u;
      if (x != y) {
        step.removed = {u, v};
        g.remove_vertex(u);
        g.remove_vertex(v);
        step.added_edges = {{x, y}};
      } else {
        std::vector<int> zs = outside_slots(g, x, {u, v, x});
        if (zs.size() != 2 || zs[0] == zs[1]) continue;  // blocked
        step.removed = {u, v, x};
        std::sort(step.removed.begin(), step.removed.end());
        g.remove_vertex(u);
        g.remove_vertex(v);
        g.remove_vertex(x);
        step.added_edges = {{zs[0], zs[1]}};
      }
      for (auto [a, b] : step.added_edges) g.add_edge(a, b);
      return true;
    }
  return false;
}

bool apply_t(WorkGraph& g, ReductionStep& step) {
  // with the multiplicity operations exhausted the graph is normally
  // simple here; triangles whose replacement would need a loop or whose
  // vertices lack two outside slots are skipped
  for (auto& [x, xrow] : g.adj)
    for (auto [y, ky] : xrow) {
      if (y < x) continue;
      for (auto [z, kz] : xrow) {
        if (z <= y || !g.adj.at(y).count(z)) continue;
        std::vector<int> xs = outside_slots(g, x, {x, y, z});
        std::vector<int> ys = outside_slots(g, y, {x, y, z});
        std::vector<int> zs = outside_slots(g, z, {x, y, z});
        if (xs.size() != 2 || ys.size() != 2 || zs.size() != 2) continue;
        if (xs[0] == xs[1]) continue;  // x1 x2 would be a loop
        step.kind = OpKind::T;
        step.x = x;
        step.y = y;
        step.z = z;
        step.x1 = xs[0];
        step.x2 = xs[1];
        step.y1 = ys[0];
        step.y2 = ys[1];
        step.z1 = zs[0];
        step.z2 = zs[1];
        step.removed = {x, y, z};
        int w = g.next_id++;
        step.added_vertex = w;
        g.remove_vertex(x);
        g.remove_vertex(y);
        g.remove_vertex(z);
        step.added_edges = {{step.x1, step.x2},
                            {w, step.y1},
                            {w, step.y2},
                            {w, step.z1},
                            {w, step.z2}};
        g.adj[w];
        for (auto [a, b] : step.added_edges) g.add_edge(a, b);
        return true;
      }
    }
  return false;
}

}  // namespace

ReductionScript reduce(const Multigraph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 4)
      throw graph_error("reduction needs a 4-regular graph");
  ReductionScript script;
  script.original_n = g.n();
  WorkGraph work = WorkGraph::from(g);
  while (true) {
    ReductionStep step;
    bool applied = apply_m4(work, step) || apply_m2(work, step) ||
                   apply_m3(work, step) || apply_t(work, step);
    if (!applied) break;
    work.assert_4_regular();
    script.steps.push_back(std::move(step));
  }
  script.universe = work.next_id;
  for (auto& [v, row] : work.adj) script.terminal_vertices.push_back(v);
  if (script.terminal_vertices.empty())
    script.terminal_kind = TerminalKind::Empty;
  else if (script.terminal_vertices.size() == 2 &&
           work.mult(script.terminal_vertices[0],
                     script.terminal_vertices[1]) == 4)
    script.terminal_kind = TerminalKind::TwoVertexQuad;
  else
    script.terminal_kind = TerminalKind::Nontrivial;
  return script;
}

Multigraph replay_step(const Multigraph& pre_universe,
                       const ReductionStep& step, int universe) {
  Multigraph post(universe);
  VertexSet removed(universe);
  for (int v : step.removed) removed.insert(v);
  for (auto [u, v] : pre_universe.edge_list())
    if (!removed.contains(u) && !removed.contains(v)) post.add_edge(u, v);
  for (auto [u, v] : step.added_edges) post.add_edge(u, v);
  return post;
}

namespace {

// dense view of one intermediate graph
struct Snapshot {
  Multigraph g;
  std::vector<int> ids;        // dense -> universe
  std::map<int, int> to_dense;

  VertexSet densify(const std::set<int>& names) const {
    VertexSet s(g.n());
    for (int v : names) s.insert(to_dense.at(v));
    return s;
  }
  bool hull_set(const std::set<int>& names) const {
    return is_hull_set(g, densify(names));
  }
};

Snapshot snapshot_of(const Multigraph& universe_graph,
                     const std::set<int>& alive, int universe) {
  Snapshot s;
  VertexSet keep(universe);
  for (int v : alive) keep.insert(v);
  s.g = universe_graph.induced(keep, &s.ids);
  for (size_t i = 0; i < s.ids.size(); ++i) s.to_dense[s.ids[i]] = int(i);
  return s;
}

// forward replay: graphs[i] is the graph before step i (universe ids)
std::vector<Snapshot> replay_all(const Multigraph& g,
                                 const ReductionScript& script) {
  std::vector<Snapshot> out;
  Multigraph cur(script.universe);
  std::set<int> alive;
  for (int v = 0; v < g.n(); ++v) alive.insert(v);
  for (auto [u, v] : g.edge_list()) cur.add_edge(u, v);
  out.push_back(snapshot_of(cur, alive, script.universe));
  for (const ReductionStep& step : script.steps) {
    cur = replay_step(cur, step, script.universe);
    for (int v : step.removed) alive.erase(v);
    if (step.added_vertex >= 0) alive.insert(step.added_vertex);
    out.push_back(snapshot_of(cur, alive, script.universe));
  }
  return out;
}

// Swap w out of S inside graph F: first try dropping it, then try
// exchanging it for another vertex, preferring early-contaminated ones.
bool swap_out(const Snapshot& F, std::set<int>& S, int w) {
  std::set<int> without = S;
  without.erase(w);
  if (F.hull_set(without)) {
    S = without;
    return true;
  }
  ContaminationTrace tr = hull_cc(F.g, F.densify(S));
  std::vector<std::pair<int, int>> candidates;  // (step, universe id)
  for (int dense = 0; dense < F.g.n(); ++dense) {
    int name = F.ids[dense];
    if (S.count(name)) continue;
    candidates.emplace_back(tr.step[dense] < 0 ? F.g.n() + 1 : tr.step[dense],
                            name);
  }
  std::sort(candidates.begin(), candidates.end());
  for (auto [st, name] : candidates) {
    std::set<int> trial = without;
    trial.insert(name);
    if (F.hull_set(trial)) {
      S = trial;
      return true;
    }
  }
  return false;
}

void lift_t_step(const Snapshot& pre, const Snapshot& post,
                 const ReductionStep& step, std::set<int>& S) {
  int w = step.added_vertex;
  bool w_in_set = S.count(w) > 0;
  if (w_in_set) w_in_set = !swap_out(post, S, w);

  if (!w_in_set) {
    // case analysis on the cycle that contaminates w in the post graph
    ContaminationTrace tr = hull_cc(post.g, post.densify(S));
    int wd = post.to_dense.at(w);
    int k = tr.step[wd];
    std::vector<int> primary_then_fallbacks;
    if (k > 0) {
      const std::vector<int>& cyc = tr.witness[wd];
      int u = cyc.size() >= 2 ? post.ids[cyc[1]] : -1;
      int v = cyc.size() >= 2 ? post.ids[cyc.back()] : -1;
      auto is_pair = [&](int a, int b, int p, int q) {
        return (a == p && b == q) || (a == q && b == p);
      };
      int case_a_pick = is_pair(u, v, step.y1, step.y2)   ? step.z
                        : is_pair(u, v, step.z1, step.z2) ? step.y
                                                          : step.y;
      auto step_of = [&](int name) {
        auto it = post.to_dense.find(name);
        if (it == post.to_dense.end()) return post.g.n() + 1;
        int s = tr.step[it->second];
        return s < 0 ? post.g.n() + 1 : s;
      };
      int p1 = step_of(step.x1), p2 = step_of(step.x2);
      int primary;
      if (p1 < k && p2 >= k) {
        bool on_cycle = false;
        for (int d : cyc)
          if (post.ids[d] == step.x1) on_cycle = true;
        primary = on_cycle ? step.x : case_a_pick;
      } else if (p2 < k && p1 >= k) {
        bool on_cycle = false;
        for (int d : cyc)
          if (post.ids[d] == step.x2) on_cycle = true;
        primary = on_cycle ? step.x : case_a_pick;
      } else {
        primary = case_a_pick;  // both early or both late
      }
      primary_then_fallbacks.push_back(primary);
    }
    for (int c : {step.x, step.y, step.z})
      if (std::find(primary_then_fallbacks.begin(),
                    primary_then_fallbacks.end(),
                    c) == primary_then_fallbacks.end())
        primary_then_fallbacks.push_back(c);
    for (int c : primary_then_fallbacks) {
      std::set<int> trial = S;
      trial.insert(c);
      if (pre.hull_set(trial)) {
        S = trial;
        return;
      }
    }
    throw internal_error(
        "T lifting exhausted {x, y, z}; contradicts the step inequality");
  }

  // w could not be swapped out: spend its slot plus the new one on a pair
  // from the triangle
  std::set<int> base = S;
  base.erase(w);
  std::vector<int> tri{step.x, step.y, step.z};
  for (int c : tri) {
    std::set<int> trial = base;
    trial.insert(c);
    if (pre.hull_set(trial)) {
      S = trial;
      return;
    }
  }
  for (size_t i = 0; i < tri.size(); ++i)
    for (size_t j = i + 1; j < tri.size(); ++j) {
      std::set<int> trial = base;
      trial.insert(tri[i]);
      trial.insert(tri[j]);
      if (pre.hull_set(trial)) {
        S = trial;
        return;
      }
    }
  throw internal_error("T lifting exhausted all fallbacks");
}

}  // namespace

VertexSet lift_hull_set(const Multigraph& g, const ReductionScript& script,
                        const std::vector<int>& terminal_hull) {
  std::vector<Snapshot> snaps = replay_all(g, script);
  std::set<int> S(terminal_hull.begin(), terminal_hull.end());
  if (!snaps.back().hull_set(S))
    throw graph_error("terminal_hull is not a hull set of the terminal graph");
  for (int i = int(script.steps.size()) - 1; i >= 0; --i) {
    const ReductionStep& step = script.steps[i];
    if (step.kind == OpKind::T) {
      lift_t_step(snaps[i], snaps[i + 1], step, S);
    } else {
      S.insert(step.designated);
      if (!snaps[i].hull_set(S))
        throw internal_error("lift of a multiplicity step failed");
    }
  }
  VertexSet out(g.n());
  for (int v : S) out.insert(v);
  return out;
}

UpperBoundResult hn_upper_4regular(const Multigraph& g) {
  UpperBoundResult res;
  res.script = reduce(g);
  std::vector<int> terminal_hull;
  switch (res.script.terminal_kind) {
    case TerminalKind::Empty:
      break;
    case TerminalKind::TwoVertexQuad:
      terminal_hull.push_back(res.script.terminal_vertices.front());
      break;
    case TerminalKind::Nontrivial:
      throw graph_error(
          "reduction stopped at a nontrivial terminal graph (input is not "
          "planar?); no half-size bound is claimed");
  }
  res.witness = lift_hull_set(g, res.script, terminal_hull);
  res.bound = res.witness.count();
  if (!is_hull_set(g, res.witness))
    throw internal_error("lifted witness failed final verification");
  return res;
}

namespace {

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::M4: return "M4";
    case OpKind::M2Path: return "M2-path";
    case OpKind::M2Cycle: return "M2-cycle";
    case OpKind::M3: return "M3";
    case OpKind::T: return "T";
  }
  return "?";
}

OpKind op_from_name(const std::string& s) {
  if (s == "M4") return OpKind::M4;
  if (s == "M2-path") return OpKind::M2Path;
  if (s == "M2-cycle") return OpKind::M2Cycle;
  if (s == "M3") return OpKind::M3;
  if (s == "T") return OpKind::T;
  throw graph_error("unknown op kind: " + s);
}

const char* terminal_name(TerminalKind k) {
  switch (k) {
    case TerminalKind::Empty: return "empty";
    case TerminalKind::TwoVertexQuad: return "two-vertex";
    case TerminalKind::Nontrivial: return "nontrivial";
  }
  return "?";
}

}  // namespace

std::string script_to_json(const ReductionScript& script) {
  json j;
  j["original_vertices"] = script.original_n;
  j["universe"] = script.universe;
  j["terminal"] = {{"kind", terminal_name(script.terminal_kind)},
                   {"vertices", script.terminal_vertices}};
  j["steps"] = json::array();
  for (const auto& s : script.steps) {
    json st;
    st["op"] = op_name(s.kind);
    st["removed"] = s.removed;
    st["added_edges"] = json::array();
    for (auto [a, b] : s.added_edges) st["added_edges"].push_back({a, b});
    if (s.added_vertex >= 0) st["added_vertex"] = s.added_vertex;
    if (s.designated >= 0) st["designated"] = s.designated;
    if (s.kind == OpKind::T)
      st["labels"] = {{"x", s.x},   {"y", s.y},   {"z", s.z},
                      {"x1", s.x1}, {"x2", s.x2}, {"y1", s.y1},
                      {"y2", s.y2}, {"z1", s.z1}, {"z2", s.z2}};
    j["steps"].push_back(st);
  }
  return j.dump(2);
}

ReductionScript script_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw graph_error("malformed script json");
  ReductionScript script;
  script.original_n = j.at("original_vertices").get<int>();
  script.universe = j.at("universe").get<int>();
  std::string tk = j.at("terminal").at("kind").get<std::string>();
  script.terminal_kind = tk == "empty"        ? TerminalKind::Empty
                         : tk == "two-vertex" ? TerminalKind::TwoVertexQuad
                                              : TerminalKind::Nontrivial;
  script.terminal_vertices =
      j.at("terminal").at("vertices").get<std::vector<int>>();
  for (const auto& st : j.at("steps")) {
    ReductionStep s;
    s.kind = op_from_name(st.at("op").get<std::string>());
    s.removed = st.at("removed").get<std::vector<int>>();
    for (const auto& e : st.at("added_edges"))
      s.added_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    if (st.contains("added_vertex")) s.added_vertex = st["added_vertex"];
    if (st.contains("designated")) s.designated = st["designated"];
    if (st.contains("labels")) {
      const auto& l = st["labels"];
      s.x = l.at("x");
      s.y = l.at("y");
      s.z = l.at("z");
      s.x1 = l.at("x1");
      s.x2 = l.at("x2");
      s.y1 = l.at("y1");
      s.y2 = l.at("y2");
      s.z1 = l.at("z1");
      s.z2 = l.at("z2");
    }
    script.steps.push_back(std::move(s));
  }
  return script;
}

}  // namespace cyconv
