#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyconv/exact.hpp"
#include "cyconv/plane.hpp"

namespace cyconv {

// One diagram: a label per strand edge, four labels per crossing in cyclic
// order. Over/under information is implied by the label order convention of
// the source tables; the hull computations never use it.
struct PDCode {
  std::string name;
  std::vector<std::array<int, 4>> crossings;
};

// Lines of the form `name PD[X[a,b,c,d],X[...],...]`, '#' comments allowed.
// Validates that every label occurs exactly twice and that names are unique.
std::vector<PDCode> parse_pd(const std::string& text);

// One vertex per crossing; the quadruple is the rotation. Rejects diagrams
// where a label repeats inside one crossing (that would be a loop).
PlaneGraph pd_to_plane_graph(const PDCode& pd);

// Number of closed strands (orbits of "continue straight through the
// crossing"); 1 for a knot.
int strand_components(const PDCode& pd);

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  int hn_cc = 0;
  int hn_fc = 0;
  std::vector<int> witness_cc;
  std::vector<int> witness_fc;
};

KnotRecord analyze_knot(const PDCode& pd, const SolveOptions& opts = {});

struct CensusRow {
  int crossings = 0;
  int total = 0;
  std::vector<std::pair<int, int>> by_hn;  // (hull number, count)
};

struct Census {
  std::vector<CensusRow> rows;  // ascending by crossing number
  std::vector<KnotRecord> records;
  bool all_match = true;  // hn_cc == hn_fc on every diagram
};

// Counts per (crossing number, hull number) over the knots of the database
// (multi-component links are skipped). Diagrams are analyzed independently,
// in parallel when opts.threads > 1, with deterministic aggregation.
Census census(const std::vector<PDCode>& db, int max_crossings,
              const SolveOptions& opts = {});

std::string census_to_text(const Census& c);
std::string census_to_json(const Census& c);

}  // namespace cyconv
