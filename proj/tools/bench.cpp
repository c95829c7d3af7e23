// Compares the serial reference paths against the OpenMP kernels on the
// workloads that actually parallelize: exact search root branching, the
// brute-force subset scan, and the per-diagram census.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyconv/exact.hpp"
#include "cyconv/knots.hpp"
#include "cyconv/multigraph.hpp"

using namespace cyconv;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return double(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename F>
void run_case(const char* name, F&& body) {
  SolveOptions serial{1};
  unsigned hw = std::thread::hardware_concurrency();
  SolveOptions parallel{hw ? int(hw) : 2};

  double t0 = now();
  auto a = body(serial);
  double t1 = now();
  auto b = body(parallel);
  double t2 = now();

  bool same = a.hn == b.hn && a.witness == b.witness;
  std::printf("%-28s serial %8.3fs  %d threads %8.3fs  speedup %5.2fx  %s\n",
              name, t1 - t0, parallel.threads, t2 - t1,
              (t1 - t0) / std::max(t2 - t1, 1e-9),
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::printf("hull number kernels, serial vs OpenMP\n\n");

  run_case("solve G_k (k=8, n=16)", [&](const SolveOptions& o) {
    return solve_cc(make_gk(8), o);
  });

  run_case("solve grid 4x4 exact", [&](const SolveOptions& o) {
    return solve_cc(make_grid(4, 4), o);
  });

  run_case("brute force grid 4x5", [&](const SolveOptions& o) {
    return brute_force_hn_cc(make_grid(4, 5), o);
  });

  std::string pd_path = argc > 1 ? argv[1] : "data/rolfsen_pd_3_8.txt";
  std::ifstream in(pd_path);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    auto codes = parse_pd(ss.str());
    SolveOptions serial{1};
    unsigned hw = std::thread::hardware_concurrency();
    SolveOptions parallel{hw ? int(hw) : 2};
    double t0 = now();
    Census a = census(codes, 8, serial);
    double t1 = now();
    Census b = census(codes, 8, parallel);
    double t2 = now();
    bool same = a.rows.size() == b.rows.size() && a.all_match == b.all_match;
    for (size_t i = 0; same && i < a.records.size(); ++i)
      same = a.records[i].hn_cc == b.records[i].hn_cc &&
             a.records[i].hn_fc == b.records[i].hn_fc;
    std::printf("%-28s serial %8.3fs  %d threads %8.3fs  speedup %5.2fx  %s\n",
                "census (bundled knots)", t1 - t0, parallel.threads, t2 - t1,
                (t1 - t0) / std::max(t2 - t1, 1e-9),
                same ? "identical" : "MISMATCH");
  } else {
    std::printf("census skipped: cannot open %s\n", pd_path.c_str());
  }
  return 0;
}
