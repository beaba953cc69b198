#include <algorithm>
#include <set>
#include <string>

#include "quasitree/decompose.hpp"
#include "quasitree/errors.hpp"
#include "quasitree/structure_tree.hpp"
#include "union_find.hpp"

namespace quasitree {

std::int64_t split_lipschitz_bound(int r) { return 3 * static_cast<std::int64_t>(std::max(r, 1)); }

bool free_intersection_check(std::size_t vertex_count, const EdgeList& tree, const EdgeList& remainder) {
  detail::UnionFind t(vertex_count);
  detail::UnionFind h(vertex_count);
  for (const auto& [u, v] : tree) t.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  for (const auto& [u, v] : remainder) h.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  // Class nodes: T classes are 0..n-1, H classes n..2n-1, both named by representatives.
  detail::UnionFind classes(2 * vertex_count);
  for (std::size_t x = 0; x < vertex_count; ++x) {
    if (!classes.unite(t.find(x), vertex_count + h.find(x))) return false;
  }
  return true;
}

Decomposition split(const Graph& g1, const Treeset& ts, bool strict) {
  const std::size_t n = g1.vertex_count();
  if (!ts.empty() && ts.vertex_count() != n) throw CutError("split: treeset belongs to a graph of different size");
  for (const auto& [u, v] : g1.edges()) {
    std::size_t separating = 0;
    for (const auto& c : ts.cuts()) separating += c.contains(u) != c.contains(v);
    if (separating > 2) {
      throw CutError("split: edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") is separated by more than one complement pair; subdivide first");
    }
  }

  const auto st = build_structure_tree(g1, ts);
  Decomposition out;
  for (std::size_t c = 0; c < ts.size(); ++c) {
    if (c < ts.complement_of(c)) out.tree.push_back(ts[c].least_boundary_edge());
  }
  std::sort(out.tree.begin(), out.tree.end());

  std::set<Edge> g1_edges;
  for (const auto& e : g1.edges()) g1_edges.insert(e);
  for (const auto& c : ts.cuts()) {
    const auto& b = c.inner_boundary();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) g1_edges.insert(normalized({b[i], b[j]}));
    }
  }
  for (const auto& [u, v] : g1_edges) {
    if (st.rho[static_cast<std::size_t>(u)] == st.rho[static_cast<std::size_t>(v)]) out.remainder.emplace_back(u, v);
  }
  EdgeList host = out.tree;
  host.insert(host.end(), out.remainder.begin(), out.remainder.end());
  out.host = Graph::from_edges(n, host);
  out.r = max_inner_boundary_diameter(g1, ts.cuts());

  auto& cert = out.certificate;
  cert.tree_acyclic = is_acyclic(Graph::from_edges(n, out.tree)) && out.host.edge_count() == host.size();
  cert.free_intersection = free_intersection_check(n, out.tree, out.remainder);
  cert.restriction_empty = restrict_cutset(ts.cuts(), Graph::from_edges(n, out.remainder)).empty();
  out.measured_lipschitz = lipschitz_constant(g1, out.host);
  cert.lipschitz_within_bound = out.measured_lipschitz <= Extended(split_lipschitz_bound(out.r));
  if (strict && !cert.ok()) {
    std::string what = "split certificate failed:";
    if (!cert.tree_acyclic) what += " T has a cycle or meets H;";
    if (!cert.free_intersection) what += " T and H do not intersect freely;";
    if (!cert.restriction_empty) what += " the treeset survives on H;";
    if (!cert.lipschitz_within_bound) {
      what += " Lipschitz constant " + out.measured_lipschitz.to_string() + " exceeds " +
              std::to_string(split_lipschitz_bound(out.r)) + ";";
    }
    throw CertificateError(what);
  }
  return out;
}

ModulusEntry one_endedness_modulus(const Graph& g, int k, BoundaryFilter filter, EnumerationCaps caps) {
  ModulusEntry out;
  out.k = k;
  out.filter = filter;
  const auto cuts = enumerate_cuts(g, k, filter, caps);
  out.cut_count = cuts.size();
  const auto comps = components(g);
  DistanceCache dist(g);
  std::vector<Vertex> other;
  for (const auto& c : cuts) {
    if (!c.is_canonical()) continue;
    other.clear();
    for (Vertex v : comps.members[static_cast<std::size_t>(c.component())]) {
      if (!c.contains(v)) other.push_back(v);
    }
    const bool small_first = c.size() <= other.size();
    const auto& small = small_first ? c.side() : other;
    const auto& large = small_first ? other : c.side();
    int r = dist.diameter(small);
    if (r > 0 && dist.diameter_at_most(large, r - 1)) r = dist.diameter(large);
    if (!out.witness || r > out.r) {
      out.r = r;
      out.witness = c;
    }
  }
  return out;
}

}  // namespace quasitree
