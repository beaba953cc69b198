#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace quasitree {

using Vertex = std::int32_t;

// Undirected edges are stored normalized with first < second. Where orientation
// matters (boundary edges, tree-edge cuts) the pair is read as (from, to).
using Edge = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<Edge>;

inline Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

// Sorts, normalizes and removes duplicate undirected edges.
EdgeList normalize_edges(EdgeList edges);

// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  // Builds a graph from an edge list. Loops and out-of-range ids throw GraphError;
  // repeated edges (in either orientation) are merged.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t max_degree() const;
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }

  // All edges, normalized, in ascending order.
  EdgeList edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace quasitree
