#include "quasitree/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quasitree/errors.hpp"

namespace quasitree {

using nlohmann::json;

GraphDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document: expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("graph document: missing integer n");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 0 || n > (std::int64_t{1} << 30)) throw ParseError("graph document: n out of range");
  EdgeList edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("graph document: edges must be an array");
    std::set<Edge> seen;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError("graph document: each edge must be a pair of integers");
      }
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError("graph document: edge [" + std::to_string(u) + "," + std::to_string(v) + "] out of range");
      }
      if (u == v) throw ParseError("graph document: loop at " + std::to_string(u));
      const Edge edge = normalized({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      if (!seen.insert(edge).second) {
        throw ParseError("graph document: duplicate edge [" + std::to_string(edge.first) + "," +
                         std::to_string(edge.second) + "]");
      }
      edges.push_back(edge);
    }
  }
  GraphDocument out{Graph::from_edges(static_cast<std::size_t>(n), edges), std::nullopt, json::object()};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("graph document: name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw ParseError("graph document: metadata must be an object");
    out.metadata = doc["metadata"];
  }
  return out;
}

Graph parse_graph(const std::string& text) { return parse_document(text).graph; }

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

std::string emit_document(const GraphDocument& doc) {
  json out = graph_to_json(doc.graph);
  if (doc.name) out["name"] = *doc.name;
  if (!doc.metadata.empty()) out["metadata"] = doc.metadata;
  return out.dump() + "\n";
}

std::string emit_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

std::string emit_dot(const Graph& g, const DotOptions& options) {
  std::set<Edge> tree;
  std::set<Edge> rest;
  const bool classed = options.tree_edges || options.remainder_edges;
  if (options.tree_edges) {
    for (const auto& e : *options.tree_edges) tree.insert(normalized(e));
  }
  if (options.remainder_edges) {
    for (const auto& e : *options.remainder_edges) rest.insert(normalized(e));
  }
  if (classed) {
    for (const auto& e : tree) {
      if (rest.count(e)) throw GraphError("emit_dot: edge classes overlap");
    }
    if (tree.size() + rest.size() != g.edge_count()) throw GraphError("emit_dot: edge classes do not match the graph");
  }
  if (options.rho && options.rho->size() != g.vertex_count()) throw GraphError("emit_dot: rho has the wrong size");

  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (options.rho) out << " [label=\"" << v << " / u" << (*options.rho)[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (classed) {
      if (tree.count(e)) {
        out << " [class=T, color=red, penwidth=2]";
      } else if (rest.count(e)) {
        out << " [class=H, color=blue]";
      } else {
        throw GraphError("emit_dot: edge classes do not match the graph");
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace quasitree
