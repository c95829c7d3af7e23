#include "cyconv/knots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "cyconv/errors.hpp"

namespace cyconv {

using json = nlohmann::json;

namespace {

void validate_pd(const PDCode& pd) {
  std::map<int, int> label_count;
  for (const auto& x : pd.crossings)
    for (int lbl : x) ++label_count[lbl];
  for (auto [lbl, cnt] : label_count)
    if (cnt != 2)
      throw graph_error(pd.name + ": label " + std::to_string(lbl) +
                        " occurs " + std::to_string(cnt) + " times");
}

PDCode parse_pd_line(const std::string& name, const std::string& body) {
  PDCode pd;
  pd.name = name;
  size_t i = 0;
  while (i < body.size()) {
    size_t x = body.find('X', i);
    if (x == std::string::npos) break;
    size_t open = body.find('[', x);
    size_t close = body.find(']', x);
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw graph_error(pd.name + ": malformed crossing");
    std::string inner = body.substr(open + 1, close - open - 1);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream in(inner);
    std::vector<int> labels;
    int v;
    while (in >> v) labels.push_back(v);
    if (labels.size() != 4)
      throw graph_error(pd.name + ": crossing with " +
                        std::to_string(labels.size()) + " labels, expected 4");
    pd.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
    i = close + 1;
  }
  if (pd.crossings.empty())
    throw graph_error(pd.name + ": no crossings found");
  validate_pd(pd);
  return pd;
}

}  // namespace

std::vector<PDCode> parse_pd(const std::string& text) {
  std::vector<PDCode> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    std::string rest;
    std::getline(ls, rest);
    size_t pdpos = rest.find("PD[");
    if (pdpos == std::string::npos)
      throw graph_error("line " + std::to_string(lineno) +
                        ": expected `name PD[...]`");
    if (!names.insert(name).second)
      throw graph_error("duplicate diagram name: " + name);
    out.push_back(parse_pd_line(name, rest.substr(pdpos + 3)));
  }
  return out;
}

PlaneGraph pd_to_plane_graph(const PDCode& pd) {
  validate_pd(pd);
  int n = int(pd.crossings.size());
  // dart 4*c + slot; twins pair the two occurrences of a label
  std::map<int, std::vector<int>> darts_of_label;
  std::vector<std::vector<int>> rotations(n);
  for (int c = 0; c < n; ++c) {
    for (int slot = 0; slot < 4; ++slot) {
      int lbl = pd.crossings[c][slot];
      darts_of_label[lbl].push_back(4 * c + slot);
      rotations[c].push_back(4 * c + slot);
    }
  }
  std::vector<std::pair<int, int>> twins;
  for (auto& [lbl, ds] : darts_of_label) {
    if (ds[0] / 4 == ds[1] / 4)
      throw graph_error(pd.name + ": label " + std::to_string(lbl) +
                        " repeats inside one crossing (loop)");
    twins.emplace_back(ds[0], ds[1]);
  }
  return make_plane_graph(n, std::move(rotations), twins);
}

int strand_components(const PDCode& pd) {
  // going straight through a crossing links slot s with slot (s+2) % 4;
  // labels on the same strand end up in one class
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    if (parent.find(x) == parent.end()) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : pd.crossings) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  std::set<int> roots;
  for (auto& [lbl, p] : parent) roots.insert(find(lbl));
  return int(roots.size());
}

KnotRecord analyze_knot(const PDCode& pd, const SolveOptions& opts) {
  PlaneGraph pg = pd_to_plane_graph(pd);
  KnotRecord rec;
  rec.name = pd.name;
  rec.crossing_number = int(pd.crossings.size());
  SolveReport cc = solve_cc(pg.underlying, opts);
  SolveReport fc = hn_fc_exact(pg, opts);
  if (!is_hull_set(pg.underlying, cc.witness) ||
      !is_hull_set_fc(pg, fc.witness))
    throw internal_error(pd.name + ": solver witness failed verification");
  rec.hn_cc = cc.hn;
  rec.hn_fc = fc.hn;
  rec.witness_cc = cc.witness.to_vector();
  rec.witness_fc = fc.witness.to_vector();
  return rec;
}

Census census(const std::vector<PDCode>& db, int max_crossings,
              const SolveOptions& opts) {
  std::vector<const PDCode*> knots;
  for (const auto& pd : db)
    if (int(pd.crossings.size()) <= max_crossings && strand_components(pd) == 1)
      knots.push_back(&pd);

  Census c;
  c.records.resize(knots.size());
  int count = int(knots.size());
  SolveOptions per_knot = opts;
  per_knot.threads = 1;  // parallelism lives across diagrams here
  if (opts.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
#endif
    for (int i = 0; i < count; ++i)
      c.records[i] = analyze_knot(*knots[i], per_knot);
  } else {
    for (int i = 0; i < count; ++i)
      c.records[i] = analyze_knot(*knots[i], per_knot);
  }

  std::map<int, std::map<int, int>> table;  // crossings -> hn -> count
  for (const auto& rec : c.records) {
    ++table[rec.crossing_number][rec.hn_cc];
    if (rec.hn_cc != rec.hn_fc) c.all_match = false;
  }
  for (auto& [cr, hist] : table) {
    CensusRow row;
    row.crossings = cr;
    for (auto [hn, cnt] : hist) {
      row.by_hn.emplace_back(hn, cnt);
      row.total += cnt;
    }
    c.rows.push_back(std::move(row));
  }
  return c;
}

std::string census_to_text(const Census& c) {
  int max_hn = 1;
  for (const auto& row : c.rows)
    for (auto [hn, cnt] : row.by_hn) max_hn = std::max(max_hn, hn);
  std::ostringstream out;
  out << "crossings";
  for (const auto& row : c.rows) out << '\t' << row.crossings;
  out << '\n';
  for (int hn = 1; hn <= max_hn; ++hn) {
    out << "hn=" << hn;
    for (const auto& row : c.rows) {
      int cnt = 0;
      for (auto [h, k] : row.by_hn)
        if (h == hn) cnt = k;
      out << '\t' << cnt;
    }
    out << '\n';
  }
  out << "total";
  for (const auto& row : c.rows) out << '\t' << row.total;
  out << '\n';
  out << (c.all_match ? "cycle and face hull numbers agree on every diagram"
                      : "cycle and face hull numbers DISAGREE somewhere")
      << '\n';
  return out.str();
}

std::string census_to_json(const Census& c) {
  json j;
  j["rows"] = json::array();
  for (const auto& row : c.rows) {
    json r;
    r["crossings"] = row.crossings;
    r["total"] = row.total;
    r["by_hn"] = json::object();
    for (auto [hn, cnt] : row.by_hn) r["by_hn"][std::to_string(hn)] = cnt;
    j["rows"].push_back(r);
  }
  j["all_match"] = c.all_match;
  j["knots"] = json::array();
  for (const auto& rec : c.records) {
    json k;
    k["name"] = rec.name;
    k["crossings"] = rec.crossing_number;
    k["hn_cc"] = rec.hn_cc;
    k["hn_fc"] = rec.hn_fc;
    k["witness_cc"] = rec.witness_cc;
    k["witness_fc"] = rec.witness_fc;
    j["knots"].push_back(k);
  }
  return j.dump(2);
}

}  // namespace cyconv
