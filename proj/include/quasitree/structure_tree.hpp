#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quasitree/cuts.hpp"
#include "quasitree/graph.hpp"

namespace quasitree {

// Orientation vertex: a choice of one side from every complement pair of one component,
// stored as a bitset over the indices of the treeset.
struct OrientationVertex {
  int component = 0;
  VertexSet cuts;
};

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t cut = 0;  // the single treeset index in u ∖ v
};

struct StructureTree {
  std::vector<OrientationVertex> vertices;
  std::vector<TreeEdge> edges;
  std::vector<std::size_t> rho;  // graph vertex -> tree vertex
  std::size_t cut_count = 0;

  std::vector<std::vector<std::size_t>> adjacency() const;
  // Tree graph on vertices.size() vertices.
  Graph tree_graph() const;
};

StructureTree build_structure_tree(const Graph& g, const Treeset& ts);

std::size_t rho(const StructureTree& st, Vertex x);

// |u ∖ v|. Throws GraphError for vertices of different components.
std::size_t tree_distance(const StructureTree& st, std::size_t u, std::size_t v);

struct StructureTreeReport {
  bool tree_per_component = true;
  bool edge_cut_bijection = true;
  bool orientation_axioms = true;
  bool distance_formula = true;
  bool chains_totally_ordered = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return tree_per_component && edge_cut_bijection && orientation_axioms && distance_formula &&
           chains_totally_ordered;
  }
};

// Distance and chain checks use every pair (x, y) with x among the first max_sources vertices.
StructureTreeReport validate_structure_tree(const StructureTree& st, const Graph& g, const Treeset& ts,
                                            std::size_t max_sources = 256);

}  // namespace quasitree
