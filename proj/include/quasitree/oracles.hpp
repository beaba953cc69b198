#pragma once

// Brute-force reference implementations. They deliberately share nothing with the fast
// paths beyond the Graph type and plain vertex lists: subset scans, Floyd-Warshall, DFS.

#include <cstddef>
#include <optional>
#include <vector>

#include "quasitree/cuts.hpp"
#include "quasitree/graph.hpp"

namespace quasitree::oracles {

// Sorted list of sorted sides.
using SideList = std::vector<std::vector<Vertex>>;

// Every nonempty proper subset of every component, filtered by the boundary-diameter
// predicate. Throws GraphError if a component has more than max_component vertices.
SideList brute_cuts(const Graph& g, int k, BoundaryFilter filter = BoundaryFilter::inner_and_outer,
                    std::size_t max_component = 18);

// Depth-first search for x_0, ..., x_{2m} = x_0 (1 <= m, 2m <= max_len) alternating
// E_T ∖ Δ and E_H ∖ Δ steps. Returns the first witness found (shortest first), if any.
std::optional<std::vector<Vertex>> brute_alternating_words(std::size_t vertex_count, const EdgeList& tree,
                                                           const EdgeList& remainder, std::size_t max_len = 8);

// |{C ∈ ts : x ∈ C, y ∉ C}| by scanning each side list.
std::size_t brute_separation_count(const Treeset& ts, Vertex x, Vertex y);

struct BruteModulus {
  int r = 0;
  std::size_t cut_count = 0;
  std::vector<Vertex> witness;  // a side realizing r, empty when there are no cuts
};

// max over brute_cuts of min(diam C, diam C̄) in the ambient metric.
BruteModulus brute_modulus(const Graph& g, int k, BoundaryFilter filter = BoundaryFilter::inner_and_outer,
                           std::size_t max_component = 18);

// All-pairs distances by Floyd-Warshall; -1 for infinity.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

}  // namespace quasitree::oracles
