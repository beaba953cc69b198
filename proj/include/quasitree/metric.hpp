#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quasitree/extended.hpp"
#include "quasitree/graph.hpp"

namespace quasitree {

// Partition of the vertex set into connected components, numbered by smallest member.
struct Components {
  std::vector<int> id;                         // vertex -> component id
  std::vector<std::vector<Vertex>> members;    // component id -> sorted members

  std::size_t count() const { return members.size(); }
  bool same(Vertex a, Vertex b) const { return id[static_cast<std::size_t>(a)] == id[static_cast<std::size_t>(b)]; }
};

Components components(const Graph& g);

inline constexpr int kUnreachable = -1;

// Breadth-first distances from source; kUnreachable where d_G is infinite.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Multi-source variant: distance to the nearest source.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

Extended distance(const Graph& g, Vertex x, Vertex y);

// {y : d_G(x, y) <= r}, sorted.
std::vector<Vertex> ball(const Graph& g, Vertex x, int r);

// Diameter of A in the ambient metric d_G (not the induced subgraph). 0 for |A| <= 1.
Extended metric_diameter(const Graph& g, std::span<const Vertex> vertices);

// Edges between distinct vertices at distance at most k.
Graph power_graph(const Graph& g, int k);

bool is_acyclic(const Graph& g);

// Smallest l >= 1 with h ⊆ g^l and g ⊆ h^l; infinity when the component relations differ.
Extended lipschitz_constant(const Graph& g, const Graph& h);

// Lazily filled table of BFS rows. Not thread-safe; meant to be owned by one computation.
class DistanceCache {
 public:
  explicit DistanceCache(const Graph& g) : graph_(&g), rows_(g.vertex_count()) {}

  const std::vector<int>& row(Vertex source);
  int operator()(Vertex a, Vertex b) { return row(a)[static_cast<std::size_t>(b)]; }

  // Max pairwise distance; kUnreachable if some pair is disconnected.
  int diameter(std::span<const Vertex> vertices);

  // True iff every pair of vertices is within distance bound.
  bool diameter_at_most(std::span<const Vertex> vertices, int bound);

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::vector<std::vector<int>> rows_;
};

struct QiGrid {
  int max_l = 16;
  int max_c = 16;
};

struct QiConstants {
  int l = 1;
  int c = 0;
  int codensity = 0;  // max over y of d(y, image)

  friend bool operator==(const QiConstants&, const QiConstants&) = default;
};

// Smallest witnesses (ordered by c, then l) for
//   d(x1,x2)/l - c <= d'(map x1, map x2) <= l d(x1,x2) + c
// plus the exact codensity. Throws QuasiIsometryError when finiteness of distances is not
// preserved in both directions, when some target vertex is unreachable from the image,
// or when no grid point works.
QiConstants quasi_isometry_constants(std::span<const Vertex> map, const Graph& source, const Graph& target,
                                     QiGrid grid = {});

}  // namespace quasitree
