#include "cyconv/exact.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyconv/errors.hpp"

namespace cyconv {

Preprocessed preprocess(const Multigraph& g) {
  Preprocessed p;
  VertexSet keep = vertices_on_cycles(g);
  p.forced = keep.complement();
  p.offset = p.forced.count();
  p.stripped = g.induced(keep, &p.kept_ids);
  return p;
}

namespace {

int component_lower_bound(const Multigraph& comp) {
  if (comp.n() <= 1) return 1;
  if (!comp.is_simple()) return 1;
  return int(block_cut_tree(comp).blocks.size()) + 1;
}

}  // namespace

int lower_bound(const Multigraph& g) {
  int total = 0;
  for (const VertexSet& c : components(g))
    total += component_lower_bound(g.induced(c));
  return total;
}

namespace {

struct DfsResult {
  bool found = false;
  std::vector<int> chosen;
  uint64_t nodes = 0;
};

// Serial DFS extending `hull` with vertices > last, strictly outside the
// hull (adding a hull member never changes the closure).
bool dfs_extend(int n, const HullFn& hull_fn, const VertexSet& full,
                const VertexSet& hull, int last, int remaining,
                std::vector<int>& chosen, uint64_t& nodes) {
  if (remaining == 0) return hull == full;
  int candidates = 0;
  for (int v = last + 1; v < n; ++v)
    if (!hull.contains(v)) ++candidates;
  if (candidates < remaining) return false;
  for (int v = last + 1; v < n; ++v) {
    if (hull.contains(v)) continue;
    ++nodes;
    VertexSet next = hull;
    next.insert(v);
    next = hull_fn(next);
    chosen.push_back(v);
    if (dfs_extend(n, hull_fn, full, next, v, remaining - 1, chosen, nodes))
      return true;
    chosen.pop_back();
  }
  return false;
}

DfsResult search_root(int n, const HullFn& hull_fn, const VertexSet& full,
                      const VertexSet& base_hull, int root, int remaining) {
  DfsResult r;
  ++r.nodes;
  VertexSet h = base_hull;
  h.insert(root);
  h = hull_fn(h);
  r.chosen.push_back(root);
  if (dfs_extend(n, hull_fn, full, h, root, remaining - 1, r.chosen, r.nodes))
    r.found = true;
  else
    r.chosen.clear();
  return r;
}

}  // namespace

SolveReport solve_with_hull(int n, const HullFn& hull_fn, int lb,
                            const VertexSet& forced,
                            const SolveOptions& opts) {
  SolveReport rep;
  rep.forced = forced;
  rep.lower_bound = lb;
  VertexSet full = VertexSet::full(n);
  VertexSet base_hull = hull_fn(forced);
  if (base_hull == full) {
    rep.hn = forced.count();
    rep.witness = forced;
    return rep;
  }

  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (!base_hull.contains(v)) roots.push_back(v);

  for (int k = std::max(lb, forced.count() + 1); k <= n; ++k) {
    int remaining = k - forced.count();
    int nroots = int(roots.size());
    std::vector<DfsResult> results(nroots);
    if (opts.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
#endif
      for (int i = 0; i < nroots; ++i)
        results[i] =
            search_root(n, hull_fn, full, base_hull, roots[i], remaining);
      // reduce exactly like the serial scan would
      int winner = -1;
      for (int i = 0; i < nroots; ++i) {
        rep.nodes_explored += results[i].nodes;
        if (results[i].found) {
          winner = i;
          break;
        }
      }
      if (winner >= 0) {
        rep.hn = k;
        rep.witness = forced;
        for (int v : results[winner].chosen) rep.witness.insert(v);
        return rep;
      }
    } else {
      bool found = false;
      for (int i = 0; i < nroots && !found; ++i) {
        DfsResult r =
            search_root(n, hull_fn, full, base_hull, roots[i], remaining);
        rep.nodes_explored += r.nodes;
        if (r.found) {
          rep.hn = k;
          rep.witness = forced;
          for (int v : r.chosen) rep.witness.insert(v);
          found = true;
        }
      }
      if (found) return rep;
    }
  }
  throw internal_error("no hull set found up to size n");
}

SolveReport solve_cc(const Multigraph& g, const SolveOptions& opts) {
  Preprocessed pre = preprocess(g);
  SolveReport rep;
  rep.forced = pre.forced;
  rep.witness = pre.forced;
  rep.hn = pre.offset;
  rep.lower_bound = pre.offset;
  for (const VertexSet& cset : components(pre.stripped)) {
    std::vector<int> comp_ids;
    Multigraph comp = pre.stripped.induced(cset, &comp_ids);
    int lb = component_lower_bound(comp);
    HullFn hull = [&comp](const VertexSet& s) { return hull_set_cc(comp, s); };
    SolveReport sub =
        solve_with_hull(comp.n(), hull, lb, VertexSet(comp.n()), opts);
    rep.hn += sub.hn;
    rep.lower_bound += sub.lower_bound;
    rep.nodes_explored += sub.nodes_explored;
    for (int v : sub.witness.to_vector())
      rep.witness.insert(pre.kept_ids[comp_ids[v]]);
  }
  return rep;
}

namespace {

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * uint64_t(n - i) / uint64_t(i + 1);
  return r;
}

// Lexicographically next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  int k = int(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// rank-th k-combination in lexicographic order.
std::vector<int> unrank_combination(int n, int k, uint64_t rank) {
  std::vector<int> c;
  int start = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = start; v < n; ++v) {
      uint64_t block = binom(n - v - 1, k - i - 1);
      if (rank < block) {
        c.push_back(v);
        start = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return c;
}

VertexSet hull_by_iteration(const IntervalFn& interval, const VertexSet& s) {
  VertexSet cur = s;
  while (true) {
    VertexSet next = interval(cur);
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

SolveReport brute_force_hn(int n, const IntervalFn& interval,
                           const SolveOptions& opts) {
  if (n > 20) throw graph_error("brute force guard: n > 20");
  SolveReport rep;
  VertexSet full = VertexSet::full(n);
  if (hull_by_iteration(interval, VertexSet(n)) == full) {
    rep.witness = VertexSet(n);
    return rep;
  }
  auto test = [&](const std::vector<int>& comb) {
    VertexSet s(n);
    for (int v : comb) s.insert(v);
    return hull_by_iteration(interval, s) == full;
  };
  for (int k = 1; k <= n; ++k) {
    uint64_t total = binom(n, k);
    uint64_t winner = total;  // rank of first hull set, if any
    if (opts.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel num_threads(opts.threads)
#endif
      {
        uint64_t local_best = total;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (int64_t r = 0; r < int64_t(total); ++r) {
          if (uint64_t(r) < local_best &&
              test(unrank_combination(n, k, uint64_t(r))))
            local_best = uint64_t(r);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        winner = std::min(winner, local_best);
      }
    } else {
      std::vector<int> comb(k);
      for (int i = 0; i < k; ++i) comb[i] = i;
      uint64_t rank = 0;
      do {
        if (test(comb)) {
          winner = rank;
          break;
        }
        ++rank;
      } while (next_combination(comb, n));
    }
    if (winner < total) {
      rep.nodes_explored += winner + 1;
      rep.hn = k;
      rep.witness = VertexSet(n);
      for (int v : unrank_combination(n, k, winner)) rep.witness.insert(v);
      return rep;
    }
    rep.nodes_explored += total;
  }
  throw internal_error("brute force found no hull set");
}

SolveReport brute_force_hn_cc(const Multigraph& g, const SolveOptions& opts) {
  IntervalFn f = [&g](const VertexSet& s) { return interval_cc(g, s); };
  return brute_force_hn(g.n(), f, opts);
}

std::vector<VertexSet> enumerate_coconvex(const Multigraph& g, int max_size) {
  if (g.n() > 20) throw graph_error("co-convex enumeration guard: n > 20");
  std::vector<VertexSet> out;
  int n = g.n();
  for (int k = 1; k <= std::min(max_size, n); ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      VertexSet s(n);
      for (int v : comb) s.insert(v);
      if (is_coconvex_cc(g, s)) out.push_back(s);
    } while (next_combination(comb, n));
  }
  return out;
}

}  // namespace cyconv
