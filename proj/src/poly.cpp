#include "cyconv/poly.hpp"

#include <algorithm>
#include <map>

#include "cyconv/convexity.hpp"
#include "cyconv/errors.hpp"

namespace cyconv {

SolveReport hn_forest(const Multigraph& g) {
  if (!is_forest(g)) throw graph_error("hn_forest: input has a cycle");
  SolveReport rep;
  rep.hn = g.n();
  rep.witness = VertexSet::full(g.n());
  rep.forced = rep.witness;
  rep.lower_bound = g.n();
  return rep;
}

namespace {

// Witness for one connected simple chordal component, in component-local
// ids: root the block-cutpoint tree at a leaf block, take its cut vertex
// plus a neighbor inside, then one neighbor of the entry cut vertex per
// remaining block.
std::vector<int> chordal_witness(const Multigraph& comp) {
  BlockCutTree bct = block_cut_tree(comp);
  int p = int(bct.blocks.size());
  std::vector<int> w;
  auto neighbor_in = [&](int x, const VertexSet& block) {
    for (auto [y, k] : comp.neighbors(x))
      if (block.contains(y)) return y;
    throw internal_error("cut vertex with no neighbor in its block");
  };
  if (p == 1) {
    int u = 0;
    int v = comp.neighbors(u).front().first;
    return {std::min(u, v), std::max(u, v)};
  }
  // leaf block = block incident to exactly one cut vertex
  std::vector<std::vector<int>> cuts_of_block(p);
  std::map<int, std::vector<int>> blocks_of_cut;
  for (auto [b, x] : bct.tree_edges) {
    cuts_of_block[b].push_back(x);
    blocks_of_cut[x].push_back(b);
  }
  int root_block = -1;
  for (int b = 0; b < p; ++b)
    if (cuts_of_block[b].size() == 1) {
      root_block = b;
      break;
    }
  if (root_block < 0) throw internal_error("block forest without a leaf");
  int xr = cuts_of_block[root_block][0];
  w.push_back(xr);
  w.push_back(neighbor_in(xr, bct.blocks[root_block]));
  // BFS outward from the root block; each other block is entered through
  // its parent cut vertex
  std::vector<bool> seen_block(p, false);
  std::map<int, bool> seen_cut;
  seen_block[root_block] = true;
  std::vector<std::pair<bool, int>> queue{{true, root_block}};  // (is_block, id)
  for (size_t h = 0; h < queue.size(); ++h) {
    auto [is_block, id] = queue[h];
    if (is_block) {
      for (int x : cuts_of_block[id])
        if (!seen_cut[x]) {
          seen_cut[x] = true;
          queue.emplace_back(false, x);
        }
    } else {
      for (int b : blocks_of_cut[id])
        if (!seen_block[b]) {
          seen_block[b] = true;
          w.push_back(neighbor_in(id, bct.blocks[b]));
          queue.emplace_back(true, b);
        }
    }
  }
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

SolveReport hn_chordal(const Multigraph& g) {
  ChordalityCheck chk = is_chordal(g);
  if (!chk.simple) throw graph_error("hn_chordal: input is not simple");
  if (!chk.chordal) throw graph_error("hn_chordal: input is not chordal");
  SolveReport rep;
  rep.witness = VertexSet(g.n());
  for (const VertexSet& cset : components(g)) {
    std::vector<int> ids;
    Multigraph comp = g.induced(cset, &ids);
    if (comp.n() == 1) {
      rep.hn += 1;
      rep.witness.insert(ids[0]);
      continue;
    }
    int p = int(block_cut_tree(comp).blocks.size());
    rep.hn += p + 1;
    for (int v : chordal_witness(comp)) rep.witness.insert(ids[v]);
  }
  rep.lower_bound = rep.hn;
  if (!is_hull_set(g, rep.witness))
    throw internal_error("chordal witness failed hull verification");
  return rep;
}

SolveReport hn_grid(int m, int n) {
  Multigraph g = make_grid(m, n);
  SolveReport rep;
  rep.hn = m + n - 1;
  rep.witness = VertexSet(g.n());
  for (int j = 0; j < n; ++j) rep.witness.insert(j);          // first row
  for (int i = 0; i < m; ++i) rep.witness.insert(i * n);      // first column
  rep.lower_bound = rep.hn;
  if (!is_hull_set(g, rep.witness))
    throw internal_error("grid witness failed hull verification");
  return rep;
}

// --- P4-sparse -------------------------------------------------------------

namespace {

std::vector<std::vector<int>> split_components(const Multigraph& g,
                                               const std::vector<int>& verts,
                                               bool in_complement) {
  VertexSet keep(g.n());
  for (int v : verts) keep.insert(v);
  std::vector<int> ids;
  Multigraph h = g.induced(keep, &ids);
  if (in_complement) h = complement(h);
  std::vector<std::vector<int>> out;
  for (const VertexSet& c : components(h)) {
    std::vector<int> part;
    for (int v : c.to_vector()) part.push_back(ids[v]);
    out.push_back(std::move(part));
  }
  return out;
}

std::unique_ptr<DecompNode> decompose(const Multigraph& g,
                                      std::vector<int> verts) {
  auto node = std::make_unique<DecompNode>();
  node->vertices = verts;
  if (verts.size() == 1) {
    node->kind = DecompNode::Kind::Leaf;
    return node;
  }

  auto comps = split_components(g, verts, false);
  if (comps.size() > 1) {
    node->kind = DecompNode::Kind::Union;
    for (auto& part : comps) node->children.push_back(decompose(g, part));
    return node;
  }
  auto cocomps = split_components(g, verts, true);
  if (cocomps.size() > 1) {
    node->kind = DecompNode::Kind::Join;
    for (auto& part : cocomps) node->children.push_back(decompose(g, part));
    return node;
  }

  // connected and co-connected: must be a spider
  VertexSet inside(g.n());
  for (int v : verts) inside.insert(v);
  auto deg_in = [&](int v) {
    int d = 0;
    for (auto [w, k] : g.neighbors(v))
      if (inside.contains(w)) ++d;
    return d;
  };
  auto try_partition = [&](std::vector<int> clique, std::vector<int> stable,
                           bool fat) -> bool {
    if (clique.size() != stable.size() || clique.size() < 2) return false;
    if (fat && clique.size() < 3) return false;
    VertexSet in_k(g.n()), in_s(g.n());
    for (int v : clique) in_k.insert(v);
    for (int v : stable) in_s.insert(v);
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j)
        if (!g.adjacent(clique[i], clique[j])) return false;
    for (size_t i = 0; i < stable.size(); ++i)
      for (size_t j = i + 1; j < stable.size(); ++j)
        if (g.adjacent(stable[i], stable[j])) return false;
    // bijection: thin pairs s with its unique neighbor, fat with its unique
    // clique non-neighbor
    std::vector<int> partner(stable.size(), -1);
    std::vector<bool> used(clique.size(), false);
    for (size_t i = 0; i < stable.size(); ++i) {
      int s = stable[i];
      std::vector<int> hits;
      for (size_t c = 0; c < clique.size(); ++c) {
        bool adj = g.adjacent(s, clique[c]);
        if ((!fat && adj) || (fat && !adj)) hits.push_back(int(c));
      }
      for (auto [w, k] : g.neighbors(s))
        if (inside.contains(w) && !in_k.contains(w)) return false;
      if (hits.size() != 1 || used[hits[0]]) return false;
      used[hits[0]] = true;
      partner[i] = hits[0];
    }
    // head: adjacent to all of K, none of S
    for (int v : verts) {
      if (in_k.contains(v) || in_s.contains(v)) continue;
      for (int c : clique)
        if (!g.adjacent(v, c)) return false;
      for (int s : stable)
        if (g.adjacent(v, s)) return false;
    }
    // align stable[i] with clique[i] via the bijection
    std::vector<int> aligned(clique.size());
    for (size_t i = 0; i < stable.size(); ++i) aligned[partner[i]] = stable[i];
    node->clique = clique;
    node->stable = aligned;
    return true;
  };

  int nh = int(verts.size());
  std::vector<int> thin_s, thin_k;
  for (int v : verts)
    if (deg_in(v) == 1) thin_s.push_back(v);
  for (int s : thin_s)
    for (auto [w, k] : g.neighbors(s))
      if (inside.contains(w)) thin_k.push_back(w);
  std::sort(thin_k.begin(), thin_k.end());
  thin_k.erase(std::unique(thin_k.begin(), thin_k.end()), thin_k.end());
  if (!thin_s.empty() && try_partition(thin_k, thin_s, false)) {
    node->kind = DecompNode::Kind::SpiderThin;
  } else {
    std::vector<int> fat_k, fat_s;
    for (int v : verts)
      if (deg_in(v) == nh - 2) fat_k.push_back(v);
    VertexSet in_k(g.n());
    for (int v : fat_k) in_k.insert(v);
    for (int v : verts) {
      if (in_k.contains(v)) continue;
      // a stable-set vertex sees all of K but one; anything adjacent to
      // the whole clique belongs to the head even if it has no other edges
      bool all_in_k = true;
      for (auto [w, k] : g.neighbors(v))
        if (inside.contains(w) && !in_k.contains(w)) all_in_k = false;
      if (all_in_k && deg_in(v) == int(fat_k.size()) - 1) fat_s.push_back(v);
    }
    if (!try_partition(fat_k, fat_s, true))
      throw graph_error("not P4-sparse");
    node->kind = DecompNode::Kind::SpiderFat;
  }
  std::vector<int> head;
  VertexSet taken(g.n());
  for (int v : node->clique) taken.insert(v);
  for (int v : node->stable) taken.insert(v);
  for (int v : verts)
    if (!taken.contains(v)) head.push_back(v);
  if (!head.empty()) node->children.push_back(decompose(g, head));
  return node;
}

// component structure of an operand in a join fold
struct JoinOperand {
  std::vector<int> verts;
  int hn = 0;
  std::vector<int> witness;
  std::vector<int> comp_mins;  // smallest vertex of each component
  bool has_edge = false;
  std::pair<int, int> smallest_edge{-1, -1};
};

JoinOperand operand_from(const Multigraph& g, const std::vector<int>& verts,
                         int hn, std::vector<int> witness) {
  JoinOperand op;
  op.verts = verts;
  op.hn = hn;
  op.witness = std::move(witness);
  for (auto& part : split_components(g, verts, false))
    op.comp_mins.push_back(*std::min_element(part.begin(), part.end()));
  VertexSet inside(g.n());
  for (int v : verts) inside.insert(v);
  for (int u : verts) {
    for (auto [w, k] : g.neighbors(u))
      if (w > u && inside.contains(w)) {
        if (!op.has_edge) op.smallest_edge = {u, w};
        op.has_edge = true;
        break;
      }
    if (op.has_edge) break;
  }
  return op;
}

JoinOperand join_pair(JoinOperand a, JoinOperand b) {
  // the lemma's formula reads sides with |V(G1)| <= |V(G2)|
  if (a.verts.size() > b.verts.size()) std::swap(a, b);
  JoinOperand out;
  out.verts = a.verts;
  out.verts.insert(out.verts.end(), b.verts.begin(), b.verts.end());
  std::sort(out.verts.begin(), out.verts.end());
  out.comp_mins = {out.verts.front()};  // a join is connected
  out.has_edge = true;
  out.smallest_edge = {a.verts.front(), b.verts.front()};
  if (a.verts.size() == 1) {
    out.hn = int(b.comp_mins.size()) + 1;
    out.witness = b.comp_mins;
    out.witness.push_back(a.verts[0]);
  } else if (a.has_edge || b.has_edge) {
    out.hn = 2;
    auto e = a.has_edge && (!b.has_edge || a.smallest_edge < b.smallest_edge)
                 ? a.smallest_edge
                 : b.smallest_edge;
    out.witness = {e.first, e.second};
  } else {
    out.hn = 3;
    out.witness = {a.verts[0], a.verts[1], b.verts[0]};
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

void annotate(const Multigraph& g, DecompNode& node, FoldOrder order) {
  for (auto& c : node.children) annotate(g, *c, order);
  switch (node.kind) {
    case DecompNode::Kind::Leaf:
      node.hn = 1;
      node.witness = node.vertices;
      break;
    case DecompNode::Kind::Union: {
      node.hn = 0;
      node.witness.clear();
      for (auto& c : node.children) {
        node.hn += c->hn;
        node.witness.insert(node.witness.end(), c->witness.begin(),
                            c->witness.end());
      }
      std::sort(node.witness.begin(), node.witness.end());
      break;
    }
    case DecompNode::Kind::Join: {
      std::vector<const DecompNode*> kids;
      for (auto& c : node.children) kids.push_back(c.get());
      std::stable_sort(kids.begin(), kids.end(),
                       [&](const DecompNode* x, const DecompNode* y) {
                         bool less = x->vertices.size() < y->vertices.size();
                         return order == FoldOrder::SmallestFirst
                                    ? less
                                    : x->vertices.size() > y->vertices.size();
                       });
      JoinOperand acc =
          operand_from(g, kids[0]->vertices, kids[0]->hn, kids[0]->witness);
      for (size_t i = 1; i < kids.size(); ++i)
        acc = join_pair(std::move(acc), operand_from(g, kids[i]->vertices,
                                                     kids[i]->hn,
                                                     kids[i]->witness));
      node.hn = acc.hn;
      node.witness = acc.witness;
      break;
    }
    case DecompNode::Kind::SpiderThin: {
      node.hn = 2 + int(node.stable.size());
      node.witness = node.stable;
      std::vector<int> ks = node.clique;
      std::sort(ks.begin(), ks.end());
      node.witness.push_back(ks[0]);
      node.witness.push_back(ks[1]);
      std::sort(node.witness.begin(), node.witness.end());
      break;
    }
    case DecompNode::Kind::SpiderFat: {
      node.hn = 2;
      std::vector<int> ks = node.clique;
      std::sort(ks.begin(), ks.end());
      node.witness = {ks[0], ks[1]};
      break;
    }
  }
}

}  // namespace

std::unique_ptr<DecompNode> decompose_p4sparse(const Multigraph& g) {
  if (!g.is_simple())
    throw graph_error("P4-sparse decomposition needs a simple graph");
  if (g.n() == 0) throw graph_error("empty graph");
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return decompose(g, all);
}

SolveReport hn_p4sparse_with_fold(const Multigraph& g, FoldOrder order) {
  SolveReport rep;
  rep.witness = VertexSet(g.n());
  if (g.n() == 0) return rep;
  auto tree = decompose_p4sparse(g);
  annotate(g, *tree, order);
  rep.hn = tree->hn;
  for (int v : tree->witness) rep.witness.insert(v);
  if (rep.witness.count() != rep.hn)
    throw internal_error("P4-sparse witness size mismatch");
  if (!is_hull_set(g, rep.witness))
    throw internal_error("P4-sparse witness failed hull verification");
  return rep;
}

SolveReport hn_p4sparse(const Multigraph& g) {
  return hn_p4sparse_with_fold(g, FoldOrder::SmallestFirst);
}

}  // namespace cyconv
