#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cyconv/convexity.hpp"
#include "cyconv/errors.hpp"
#include "cyconv/exact.hpp"
#include "cyconv/knots.hpp"
#include "cyconv/plane.hpp"
#include "cyconv/poly.hpp"
#include "cyconv/reduce4.hpp"

using json = nlohmann::json;
using namespace cyconv;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graph_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Either a plain multigraph or an embedded plane graph, depending on the
// file contents.
struct GraphInput {
  std::optional<Multigraph> graph;
  std::optional<PlaneGraph> plane;

  const Multigraph& mg() const {
    return plane ? plane->underlying : *graph;
  }
  const PlaneGraph& pg() const {
    if (!plane)
      throw graph_error("face convexity needs an embedded input "
                        "(rotation-system json or a PD code)");
    return *plane;
  }
};

GraphInput load_graph(const std::string& path) {
  std::string text = slurp(path);
  GraphInput in;
  size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{' &&
      text.find("\"rotations\"") != std::string::npos) {
    in.plane = parse_rotation_json(text);
  } else if (text.find("PD[") != std::string::npos) {
    auto codes = parse_pd(text);
    if (codes.size() != 1)
      throw graph_error("expected exactly one PD code in a --graph file");
    in.plane = pd_to_plane_graph(codes[0]);
  } else {
    in.graph = parse_graph(text);
  }
  return in;
}

std::vector<int> parse_set(const std::string& spec, int n) {
  std::vector<int> out;
  if (spec.empty()) return out;
  std::string item;
  std::istringstream ss(spec);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw graph_error("bad vertex id: " + item);
    if (v < 0 || v >= n)
      throw graph_error("vertex id out of range: " + std::to_string(v));
    out.push_back(v);
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("CYCONV_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

void emit(const json& j, const std::string& format, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json report_json(const SolveReport& rep, const std::string& method) {
  json j;
  j["hn"] = rep.hn;
  j["witness"] = rep.witness.to_vector();
  j["method"] = method;
  j["forced"] = rep.forced.to_vector();
  j["lower_bound"] = rep.lower_bound;
  j["nodes_explored"] = rep.nodes_explored;
  return j;
}

// --- subcommands -----------------------------------------------------------

int cmd_hull(const std::string& graph_file, const std::string& set_spec,
             const std::string& convexity, bool trace,
             const std::string& format) {
  GraphInput in = load_graph(graph_file);
  int n = in.mg().n();
  VertexSet s(n);
  for (int v : parse_set(set_spec, n)) s.insert(v);

  json j;
  std::ostringstream text;
  j["convexity"] = convexity;
  if (convexity == "cycle") {
    ContaminationTrace tr = hull_cc(in.mg(), s);
    j["hull"] = tr.hull.to_vector();
    j["is_hull_set"] = (tr.hull == VertexSet::full(n));
    json steps = json::object(), witnesses = json::object();
    for (int v = 0; v < n; ++v)
      if (tr.step[v] >= 0) {
        steps[std::to_string(v)] = tr.step[v];
        if (trace && tr.step[v] > 0)
          witnesses[std::to_string(v)] = tr.witness[v];
      }
    j["steps"] = steps;
    if (trace) j["witness_cycles"] = witnesses;
    text << "hull:";
    for (int v : tr.hull.to_vector()) text << ' ' << v;
    text << "\n";
    for (int v = 0; v < n; ++v)
      if (tr.step[v] > 0) {
        text << "  " << v << " at step " << tr.step[v];
        if (trace) {
          text << " via cycle";
          for (int c : tr.witness[v]) text << ' ' << c;
        }
        text << "\n";
      }
  } else {
    const PlaneGraph& pg = in.pg();
    FaceTrace tr = hull_fc(pg, s);
    j["hull"] = tr.hull.to_vector();
    j["is_hull_set"] = (tr.hull == VertexSet::full(n));
    json steps = json::object(), witnesses = json::object();
    for (int v = 0; v < n; ++v)
      if (tr.step[v] >= 0) {
        steps[std::to_string(v)] = tr.step[v];
        if (trace && tr.witness_face[v] >= 0)
          witnesses[std::to_string(v)] = pg.face_vertices[tr.witness_face[v]];
      }
    j["steps"] = steps;
    if (trace) j["witness_faces"] = witnesses;
    text << "hull:";
    for (int v : tr.hull.to_vector()) text << ' ' << v;
    text << "\n";
  }
  emit(j, format, text.str());
  return 0;
}

int cmd_hn(const std::string& graph_file, const std::string& method,
           const std::string& convexity, const std::string& grid_dims,
           int threads, const std::string& format) {
  GraphInput in = load_graph(graph_file);
  SolveOptions opts;
  opts.threads = threads;
  const Multigraph& g = in.mg();

  SolveReport rep;
  std::string used = method;
  if (convexity == "face") {
    if (method != "auto" && method != "exact" && method != "bruteforce")
      throw graph_error("face convexity supports --method exact|bruteforce");
    if (method == "bruteforce") {
      const PlaneGraph& pg = in.pg();
      IntervalFn f = [&pg](const VertexSet& s) { return interval_fc(pg, s); };
      rep = brute_force_hn(pg.n(), f, opts);
      used = "bruteforce";
    } else {
      rep = hn_fc_exact(in.pg(), opts);
      used = "exact";
    }
  } else if (method == "forest") {
    rep = hn_forest(g);
  } else if (method == "chordal") {
    rep = hn_chordal(g);
  } else if (method == "grid") {
    if (!grid_dims.empty()) {
      int m = 0, n = 0;
      char comma = 0;
      std::istringstream ss(grid_dims);
      if (!(ss >> m >> comma >> n) || comma != ',' || m < 1 || n < 1)
        throw graph_error("--grid-dims expects m,n");
      Multigraph canon = make_grid(m, n);
      if (canon.n() != g.n() || canon.edge_list() != g.edge_list())
        throw graph_error("input is not the canonical m x n grid");
      rep = hn_grid(m, n);
    } else {
      auto match = detect_grid(g);
      if (!match) throw graph_error("input graph is not a grid");
      rep.hn = match->rows + match->cols - 1;
      rep.witness = VertexSet(g.n());
      for (int v = 0; v < g.n(); ++v)
        if (match->coords[v].first == 0 || match->coords[v].second == 0)
          rep.witness.insert(v);
      rep.lower_bound = rep.hn;
      if (!is_hull_set(g, rep.witness))
        throw internal_error("grid witness failed hull verification");
    }
  } else if (method == "p4sparse") {
    rep = hn_p4sparse(g);
  } else if (method == "bruteforce") {
    rep = brute_force_hn_cc(g, opts);
  } else if (method == "exact") {
    rep = solve_cc(g, opts);
  } else if (method == "auto") {
    if (is_forest(g)) {
      rep = hn_forest(g);
      used = "forest";
    } else {
      ChordalityCheck chk = is_chordal(g);
      if (chk.simple && chk.chordal) {
        rep = hn_chordal(g);
        used = "chordal";
      } else if (auto match = detect_grid(g)) {
        rep.hn = match->rows + match->cols - 1;
        rep.witness = VertexSet(g.n());
        for (int v = 0; v < g.n(); ++v)
          if (match->coords[v].first == 0 || match->coords[v].second == 0)
            rep.witness.insert(v);
        rep.lower_bound = rep.hn;
        used = "grid";
      } else {
        bool p4 = false;
        if (g.is_simple()) {
          try {
            rep = hn_p4sparse(g);
            p4 = true;
          } catch (const graph_error&) {
          }
        }
        if (p4) {
          used = "p4sparse";
        } else {
          rep = solve_cc(g, opts);
          used = "exact";
        }
      }
    }
  } else {
    throw graph_error("unknown method: " + method);
  }

  json j = report_json(rep, used);
  std::ostringstream text;
  text << "hn = " << rep.hn << " (method " << used << ")\nwitness:";
  for (int v : rep.witness.to_vector()) text << ' ' << v;
  text << "\n";
  emit(j, format, text.str());
  return 0;
}

int cmd_reduce(const std::string& graph_file, const std::string& format) {
  GraphInput in = load_graph(graph_file);
  const Multigraph& g = in.mg();
  ReductionScript script = reduce(g);
  json j = json::parse(script_to_json(script));
  std::ostringstream text;
  text << script.steps.size() << " steps, terminal "
       << (script.terminal_kind == TerminalKind::Empty ? "empty"
           : script.terminal_kind == TerminalKind::TwoVertexQuad
               ? "two-vertex"
               : "nontrivial")
       << "\n";
  if (script.terminal_kind != TerminalKind::Nontrivial) {
    std::vector<int> seed;
    if (script.terminal_kind == TerminalKind::TwoVertexQuad)
      seed.push_back(script.terminal_vertices.front());
    VertexSet witness = lift_hull_set(g, script, seed);
    if (!is_hull_set(g, witness))
      throw internal_error("lifted witness failed final verification");
    j["witness"] = witness.to_vector();
    j["bound"] = witness.count();
    text << "hull set of size " << witness.count() << ":";
    for (int v : witness.to_vector()) text << ' ' << v;
    text << "\n";
  } else {
    j["witness"] = nullptr;
    text << "no half-size bound claimed for a nontrivial terminal\n";
  }
  emit(j, format, text.str());
  return 0;
}

int cmd_knot(const std::string& pd_file, int threads,
             const std::string& format) {
  auto codes = parse_pd(slurp(pd_file));
  SolveOptions opts;
  opts.threads = threads;
  json j = json::array();
  std::ostringstream text;
  for (const auto& pd : codes) {
    KnotRecord rec = analyze_knot(pd, opts);
    json k;
    k["name"] = rec.name;
    k["crossings"] = rec.crossing_number;
    k["hn_cc"] = rec.hn_cc;
    k["hn_fc"] = rec.hn_fc;
    k["witness_cc"] = rec.witness_cc;
    k["witness_fc"] = rec.witness_fc;
    k["match"] = rec.hn_cc == rec.hn_fc;
    j.push_back(k);
    text << rec.name << ": crossings " << rec.crossing_number << ", hn_cc "
         << rec.hn_cc << ", hn_fc " << rec.hn_fc << "\n";
  }
  emit(j, format, text.str());
  return 0;
}

int cmd_census(const std::string& pd_file, int max_crossings, int threads,
               const std::string& format) {
  auto codes = parse_pd(slurp(pd_file));
  SolveOptions opts;
  opts.threads = threads;
  Census c = census(codes, max_crossings, opts);
  if (format == "json")
    std::cout << census_to_json(c) << "\n";
  else
    std::cout << census_to_text(c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle and face convexity toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  int threads = default_threads();
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "worker threads (default: cores)");

  std::string graph_file, set_spec, convexity = "cycle", method = "auto";
  std::string pd_file, grid_dims;
  bool trace = false;
  int max_crossings = 8;

  auto* hull = app.add_subcommand("hull", "hull of a vertex set");
  hull->add_option("--graph", graph_file)->required();
  hull->add_option("--set", set_spec, "comma-separated vertex ids")
      ->required();
  hull->add_option("--convexity", convexity)
      ->check(CLI::IsMember({"cycle", "face"}));
  hull->add_flag("--trace", trace, "include per-vertex witnesses");

  auto* hn = app.add_subcommand("hn", "minimum hull set");
  hn->add_option("--graph", graph_file)->required();
  hn->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "exact", "bruteforce", "chordal", "grid",
                             "p4sparse", "forest"}));
  hn->add_option("--convexity", convexity)
      ->check(CLI::IsMember({"cycle", "face"}));
  hn->add_option("--grid-dims", grid_dims,
                 "m,n to bypass grid detection (canonical ids)");

  auto* red = app.add_subcommand("reduce", "4-regular reduction pipeline");
  red->add_option("--graph", graph_file)->required();

  auto* knot = app.add_subcommand("knot", "hull numbers of PD diagrams");
  knot->add_option("--pd", pd_file)->required();

  auto* cen = app.add_subcommand("census", "table of counts by crossing and hull number");
  cen->add_option("--pd", pd_file)->required();
  cen->add_option("--max-crossings", max_crossings);

  CLI11_PARSE(app, argc, argv);

  try {
    if (hull->parsed())
      return cmd_hull(graph_file, set_spec, convexity, trace, format);
    if (hn->parsed())
      return cmd_hn(graph_file, method, convexity, grid_dims, threads, format);
    if (red->parsed()) return cmd_reduce(graph_file, format);
    if (knot->parsed()) return cmd_knot(pd_file, threads, format);
    if (cen->parsed())
      return cmd_census(pd_file, max_crossings, threads, format);
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const graph_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
