#include "quasitree/graph.hpp"

#include <algorithm>
#include <string>

#include "quasitree/errors.hpp"

namespace quasitree {

EdgeList normalize_edges(EdgeList edges) {
  for (auto& e : edges) e = normalized(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v)) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                       std::to_string(vertex_count) + " vertices");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += list.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adjacency_) d = std::max(d, list.size());
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

}  // namespace quasitree
