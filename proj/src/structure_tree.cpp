#include "quasitree/structure_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "quasitree/errors.hpp"

namespace quasitree {

namespace {

using Key = std::pair<int, VertexSet>;

// Per cut: indices of treeset cuts D with C ⊆ D, as a bitset over the treeset.
std::vector<VertexSet> superset_table(const Treeset& ts) {
  std::vector<VertexSet> sup(ts.size(), VertexSet(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (ts[i].component() == ts[j].component() && ts[i].members().is_subset_of(ts[j].members())) {
        sup[i].set(j);
      }
    }
  }
  return sup;
}

// u_C = {D : C ⊆ D or C̄ ⊊ D}
VertexSet u_of(const Treeset& ts, const std::vector<VertexSet>& sup, std::size_t c) {
  VertexSet u = sup[c];
  const std::size_t cbar = ts.complement_of(c);
  VertexSet strict = sup[cbar];
  strict.reset(cbar);
  return u | strict;
}

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  std::vector<std::size_t> dist(adj.size(), static_cast<std::size_t>(-1));
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b : adj[a]) {
      if (dist[b] == static_cast<std::size_t>(-1)) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<std::size_t>> StructureTree::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Graph StructureTree::tree_graph() const {
  EdgeList list;
  for (const auto& e : edges) list.emplace_back(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
  return Graph::from_edges(vertices.size(), list);
}

StructureTree build_structure_tree(const Graph& g, const Treeset& ts) {
  if (ts.vertex_count() != g.vertex_count() && !ts.empty()) {
    throw CutError("build_structure_tree: treeset belongs to a graph of different size");
  }
  require_treeset(g, ts.cuts());

  StructureTree st;
  st.cut_count = ts.size();
  std::map<Key, std::size_t> index;
  auto intern = [&](int component, VertexSet bits) {
    Key key{component, bits};
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const std::size_t id = st.vertices.size();
    st.vertices.push_back({component, std::move(bits)});
    index.emplace(std::move(key), id);
    return id;
  };

  const auto sup = superset_table(ts);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t c = 0; c < ts.size(); ++c) {
    VertexSet u = u_of(ts, sup, c);
    VertexSet v = u;
    v.flip(c);
    v.flip(ts.complement_of(c));
    const int comp = ts[c].component();
    const std::size_t a = intern(comp, u);
    const std::size_t b = intern(comp, v);
    const auto key = std::minmax(a, b);
    if (seen.emplace(key, c).second) st.edges.push_back({a, b, c});
  }

  const Components comps = components(g);
  st.rho.resize(g.vertex_count());
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    const int comp = comps.id[x];
    VertexSet bits(ts.size());
    for (std::size_t c = 0; c < ts.size(); ++c) {
      if (ts[c].component() == comp && ts[c].contains(static_cast<Vertex>(x))) bits.set(c);
    }
    st.rho[x] = intern(comp, std::move(bits));
  }
  return st;
}

std::size_t rho(const StructureTree& st, Vertex x) {
  if (x < 0 || static_cast<std::size_t>(x) >= st.rho.size()) throw GraphError("rho: vertex out of range");
  return st.rho[static_cast<std::size_t>(x)];
}

std::size_t tree_distance(const StructureTree& st, std::size_t u, std::size_t v) {
  if (u >= st.vertices.size() || v >= st.vertices.size()) throw GraphError("tree_distance: vertex out of range");
  const auto& a = st.vertices[u];
  const auto& b = st.vertices[v];
  if (a.component != b.component) throw GraphError("tree_distance: vertices lie in different components");
  return (a.cuts - b.cuts).count();
}

StructureTreeReport validate_structure_tree(const StructureTree& st, const Graph& g, const Treeset& ts,
                                            std::size_t max_sources) {
  StructureTreeReport report;
  auto fail = [&](bool& flag, std::string message) {
    flag = false;
    if (report.failures.size() < 32) report.failures.push_back(std::move(message));
  };

  // Tree-ness: per component connected with nodes - 1 edges.
  const auto adj = st.adjacency();
  std::map<int, std::pair<std::size_t, std::size_t>> counts;  // component -> (nodes, edges)
  for (const auto& u : st.vertices) ++counts[u.component].first;
  for (const auto& e : st.edges) {
    if (st.vertices[e.u].component != st.vertices[e.v].component) {
      fail(report.tree_per_component, "edge joins different components");
    }
    ++counts[st.vertices[e.u].component].second;
  }
  for (const auto& [comp, c] : counts) {
    if (c.second + 1 != c.first) {
      fail(report.tree_per_component, "component " + std::to_string(comp) + ": " + std::to_string(c.first) +
                                          " vertices, " + std::to_string(c.second) + " edges");
    }
  }
  std::map<int, std::size_t> first_node;
  for (std::size_t i = 0; i < st.vertices.size(); ++i) first_node.emplace(st.vertices[i].component, i);
  for (const auto& [comp, root] : first_node) {
    const auto dist = bfs(adj, root);
    for (std::size_t i = 0; i < st.vertices.size(); ++i) {
      if (st.vertices[i].component == comp && dist[i] == static_cast<std::size_t>(-1)) {
        fail(report.tree_per_component, "component " + std::to_string(comp) + " is disconnected");
        break;
      }
    }
  }

  // Edge <-> cut: u ∖ v is exactly {C}, v ∖ u is exactly {C̄}, and every pair appears once.
  std::vector<std::size_t> pair_hits(ts.size(), 0);
  for (const auto& e : st.edges) {
    const auto& u = st.vertices[e.u].cuts;
    const auto& v = st.vertices[e.v].cuts;
    if (e.cut >= ts.size() || (u - v).count() != 1 || !(u - v).test(e.cut) || (v - u).count() != 1 ||
        !(v - u).test(ts.complement_of(e.cut))) {
      fail(report.edge_cut_bijection, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                          ") does not differ by exactly one complement pair");
      continue;
    }
    ++pair_hits[std::min(e.cut, ts.complement_of(e.cut))];
  }
  for (std::size_t c = 0; c < ts.size(); ++c) {
    if (c <= ts.complement_of(c) && pair_hits[c] != 1) {
      fail(report.edge_cut_bijection,
           "cut " + to_string(ts[c]) + " labels " + std::to_string(pair_hits[c]) + " edges");
    }
  }

  // (U1), (U2); (U3) holds for any finite family.
  const auto sup = superset_table(ts);
  for (std::size_t i = 0; i < st.vertices.size(); ++i) {
    const auto& u = st.vertices[i];
    for (std::size_t c = 0; c < ts.size(); ++c) {
      const bool mine = ts[c].component() == u.component;
      if (!mine) {
        if (u.cuts.test(c)) fail(report.orientation_axioms, "vertex " + std::to_string(i) + " holds a foreign cut");
        continue;
      }
      if (c < ts.complement_of(c) && u.cuts.test(c) == u.cuts.test(ts.complement_of(c))) {
        fail(report.orientation_axioms, "vertex " + std::to_string(i) + " violates (U1) at " + to_string(ts[c]));
      }
      if (u.cuts.test(c) && !sup[c].is_subset_of(u.cuts)) {
        fail(report.orientation_axioms, "vertex " + std::to_string(i) + " violates (U2) at " + to_string(ts[c]));
      }
    }
  }

  // Distance formula and chain order on sampled pairs.
  const std::size_t n = g.vertex_count();
  const std::size_t sources = std::min(n, max_sources);
  for (std::size_t x = 0; x < sources; ++x) {
    const auto dist = bfs(adj, st.rho[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (st.vertices[st.rho[x]].component != st.vertices[st.rho[y]].component) continue;
      ++report.pairs_checked;
      const std::size_t sep =
          separating_cuts(ts.cuts(), static_cast<Vertex>(x), static_cast<Vertex>(y)).size();
      const std::size_t formula = tree_distance(st, st.rho[x], st.rho[y]);
      if (dist[st.rho[y]] != sep || formula != sep) {
        fail(report.distance_formula, "pair (" + std::to_string(x) + "," + std::to_string(y) + "): tree distance " +
                                          std::to_string(dist[st.rho[y]]) + ", |u\\v| " + std::to_string(formula) +
                                          ", separating " + std::to_string(sep));
      }
      const VertexSet diff = st.vertices[st.rho[x]].cuts - st.vertices[st.rho[y]].cuts;
      std::vector<std::size_t> chain;
      for (auto c = diff.find_first(); c != VertexSet::npos; c = diff.find_next(c)) chain.push_back(c);
      std::sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
        if (ts[a].size() != ts[b].size()) return ts[a].size() < ts[b].size();
        return a < b;
      });
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!ts[chain[i - 1]].members().is_subset_of(ts[chain[i]].members())) {
          fail(report.chains_totally_ordered,
               "pair (" + std::to_string(x) + "," + std::to_string(y) + "): u\\v is not a chain");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace quasitree
