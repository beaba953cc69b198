#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasitree/graph.hpp"

namespace quasitree {

struct GraphDocument {
  Graph graph;
  std::optional<std::string> name;
  nlohmann::json metadata = nlohmann::json::object();
};

// {"n": 4, "edges": [[0,1],[1,2],[2,3]], "name": ..., "metadata": {...}}
// Throws ParseError on malformed text, loops, out-of-range ids or duplicate pairs.
GraphDocument parse_document(const std::string& text);
Graph parse_graph(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);
std::string emit_document(const GraphDocument& doc);
std::string emit_graph(const Graph& g);

struct DotOptions {
  std::optional<EdgeList> tree_edges;
  std::optional<EdgeList> remainder_edges;
  std::optional<std::vector<std::size_t>> rho;  // tree-vertex label per graph vertex
};

// Throws GraphError when the edge classes overlap or do not cover the graph.
std::string emit_dot(const Graph& g, const DotOptions& options = {});

// name:AxBxC, e.g. path:4, grid:3x3, ladder:2x20, tree_of_triangles:10.
struct FamilySpec {
  std::string name;
  std::vector<int> params;
  std::uint64_t seed = 0;
};

FamilySpec parse_family(const std::string& text, std::uint64_t seed = 0);
std::string to_string(const FamilySpec& spec);

// Throws GraphError on unknown names or bad parameters.
Graph generate(const FamilySpec& spec);

// Random tree on m nodes: node i > 0 picks its parent uniformly (mt19937_64 output
// modulo the count) among earlier nodes with fewer than two children.
std::vector<int> random_binary_tree_parents(int m, std::uint64_t seed);

}  // namespace quasitree
