#include <algorithm>
#include <set>
#include <string>

#include "quasitree/decompose.hpp"
#include "quasitree/errors.hpp"

namespace quasitree {

bool PipelineResult::ok() const {
  if (!converged || !composite_qi_error.empty()) return false;
  return std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return s.certificate.ok(); });
}

namespace {

Treeset transport(const Treeset& ts, const SubdivisionResult& sub, const Graph& h_next) {
  const auto pulled = pullback_cutset(sub.lambda, ts.cuts(), sub.graph);
  const auto restricted = canonical_cutset(restrict_cutset(pulled, h_next));
  return require_treeset(h_next, restricted);
}

bool injective(std::span<const Vertex> map) {
  std::set<Vertex> seen(map.begin(), map.end());
  return seen.size() == map.size();
}

std::string stage_failure(std::size_t index, const StageCertificate& c) {
  std::string what = "stage " + std::to_string(index) + " certificate failed:";
  if (!c.split.ok()) what += " split;";
  if (!c.gamma_injective) what += " embedding not injective;";
  if (!c.qi_error.empty()) what += " " + c.qi_error + ";";
  return what;
}

}  // namespace

PipelineResult accessibility_pipeline(const Graph& g, const PipelineOptions& options) {
  const std::size_t n = g.vertex_count();
  PipelineResult result;
  result.input_vertices = n;

  std::vector<Treeset> pending;
  if (!options.reenumerate) {
    const auto cuts = enumerate_cuts(g, options.k, options.filter, options.caps);
    result.cut_count = cuts.size();
    pending = partition_into_treesets(g, cuts);
    result.treeset_count = pending.size();
  }

  Graph h_graph = g;
  Graph full = g;
  EdgeList t_acc;
  std::vector<Vertex> lambda(n);
  for (std::size_t x = 0; x < n; ++x) lambda[x] = static_cast<Vertex>(x);

  for (std::size_t index = 0;; ++index) {
    Treeset ts;
    if (options.reenumerate) {
      const auto cuts = enumerate_cuts(h_graph, options.k, options.filter, options.caps);
      if (cuts.empty()) break;
      if (index >= options.max_stages) {
        result.converged = false;
        break;
      }
      result.cut_count += cuts.size();
      ts = partition_into_treesets(h_graph, cuts).front();
      ++result.treeset_count;
    } else {
      if (index >= pending.size()) break;
      ts = pending[index];
    }

    Stage stage;
    stage.treeset_size = ts.size();
    stage.subdivision = subdivide(h_graph, ts);
    const auto& sub = stage.subdivision;
    stage.decomposition = split(sub.graph, sub.lifted, options.strict);
    const auto& dec = stage.decomposition;

    const std::size_t y_count = sub.graph.vertex_count();
    t_acc.insert(t_acc.end(), dec.tree.begin(), dec.tree.end());
    Graph h_next = Graph::from_edges(y_count, dec.remainder);
    EdgeList all = t_acc;
    all.insert(all.end(), dec.remainder.begin(), dec.remainder.end());
    Graph full_next = Graph::from_edges(y_count, all);

    auto& cert = stage.certificate;
    cert.split = dec.certificate;
    cert.measured_lipschitz = dec.measured_lipschitz;
    cert.r = dec.r;
    cert.gamma_injective = injective(sub.gamma);
    if (full_next.edge_count() != all.size()) cert.split.tree_acyclic = false;
    if (options.measure_qi && y_count <= options.qi_vertex_limit) {
      cert.qi_measured = true;
      try {
        cert.inclusion_qi = quasi_isometry_constants(sub.gamma, full, full_next, options.grid);
      } catch (const QuasiIsometryError& e) {
        cert.qi_error = e.what();
      }
    }
    if (options.strict && !cert.ok()) throw CertificateError(stage_failure(index, cert));

    if (!options.reenumerate) {
      for (std::size_t j = index + 1; j < pending.size(); ++j) pending[j] = transport(pending[j], sub, h_next);
    }
    std::vector<Vertex> next_lambda(y_count);
    for (std::size_t y = 0; y < y_count; ++y) {
      next_lambda[y] = lambda[static_cast<std::size_t>(sub.lambda[y])];
    }
    lambda = std::move(next_lambda);
    h_graph = std::move(h_next);
    full = std::move(full_next);
    result.stages.push_back(std::move(stage));
  }

  std::sort(t_acc.begin(), t_acc.end());
  result.accumulated_tree = t_acc;
  result.final_remainder = h_graph.edges();
  result.final_graph = full;
  result.gamma.resize(n);
  for (std::size_t x = 0; x < n; ++x) result.gamma[x] = static_cast<Vertex>(x);
  result.lambda = lambda;
  if (options.measure_qi && full.vertex_count() <= options.qi_vertex_limit) {
    try {
      result.composite_qi = quasi_isometry_constants(result.gamma, g, full, options.grid);
    } catch (const QuasiIsometryError& e) {
      result.composite_qi_error = e.what();
    }
  }
  if (options.strict && !result.composite_qi_error.empty()) {
    throw CertificateError("composite embedding: " + result.composite_qi_error);
  }
  return result;
}

EdgeList spanning_forest_of_classes(const Graph& gY, const EdgeList& remainder) {
  const auto h = Graph::from_edges(gY.vertex_count(), remainder);
  EdgeList out;
  std::vector<char> seen(h.vertex_count(), 0);
  std::vector<Vertex> queue;
  for (std::size_t root = 0; root < h.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.assign(1, static_cast<Vertex>(root));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex a = queue[head];
      for (Vertex b : h.neighbors(a)) {
        if (seen[static_cast<std::size_t>(b)]) continue;
        seen[static_cast<std::size_t>(b)] = 1;
        out.push_back(normalized({a, b}));
        queue.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> nearest_image_collapse(std::size_t vertex_count, const EdgeList& tree,
                                           std::span<const Vertex> gamma) {
  const auto t = Graph::from_edges(vertex_count, tree);
  std::vector<int> dist(vertex_count, kUnreachable);
  std::vector<Vertex> label(vertex_count, -1);
  std::vector<Vertex> layer;
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    const auto y = static_cast<std::size_t>(gamma[x]);
    if (y >= vertex_count) throw GraphError("contract: gamma image out of range");
    if (dist[y] == 0) throw GraphError("contract: gamma is not injective");
    dist[y] = 0;
    label[y] = static_cast<Vertex>(x);
    layer.push_back(gamma[x]);
  }
  std::vector<Vertex> next;
  for (int d = 0; !layer.empty(); ++d) {
    next.clear();
    for (Vertex a : layer) {
      for (Vertex b : t.neighbors(a)) {
        const auto bi = static_cast<std::size_t>(b);
        if (dist[bi] == kUnreachable) {
          dist[bi] = d + 1;
          label[bi] = label[static_cast<std::size_t>(a)];
          next.push_back(b);
        } else if (dist[bi] == d + 1) {
          label[bi] = std::min(label[bi], label[static_cast<std::size_t>(a)]);
        }
      }
    }
    layer.swap(next);
  }
  for (std::size_t y = 0; y < vertex_count; ++y) {
    if (label[y] < 0) throw GraphError("contract: vertex " + std::to_string(y) + " cannot reach the image");
  }
  return label;
}

EdgeList contract(const Graph& gY, const EdgeList& tree, std::span<const Vertex> gamma) {
  const std::size_t y_count = gY.vertex_count();
  const auto t = Graph::from_edges(y_count, tree);
  if (!is_acyclic(t)) throw CertificateError("contract: tree edges contain a cycle");
  const auto lambda = nearest_image_collapse(y_count, tree, gamma);

  std::vector<std::size_t> fiber_size(gamma.size(), 0);
  std::vector<std::size_t> fiber_edges(gamma.size(), 0);
  for (Vertex x : lambda) ++fiber_size[static_cast<std::size_t>(x)];
  std::set<Edge> out;
  std::size_t crossing = 0;
  for (const auto& [a, b] : t.edges()) {
    const Vertex la = lambda[static_cast<std::size_t>(a)];
    const Vertex lb = lambda[static_cast<std::size_t>(b)];
    if (la == lb) {
      ++fiber_edges[static_cast<std::size_t>(la)];
    } else {
      ++crossing;
      out.insert(normalized({la, lb}));
    }
  }
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    if (fiber_edges[x] + 1 != fiber_size[x]) {
      throw CertificateError("contract: fiber of " + std::to_string(x) + " is not a subtree");
    }
  }
  EdgeList result(out.begin(), out.end());
  if (crossing != result.size() || !is_acyclic(Graph::from_edges(gamma.size(), result))) {
    throw CertificateError("contract: contracted graph has a cycle");
  }
  return result;
}

TreeifyResult treeify(const Graph& g, const PipelineOptions& options) {
  TreeifyResult out;
  out.pipeline = accessibility_pipeline(g, options);
  const auto& p = out.pipeline;
  const std::size_t y_count = p.final_graph.vertex_count();

  out.residual_forest = spanning_forest_of_classes(p.final_graph, p.final_remainder);
  EdgeList combined = p.accumulated_tree;
  combined.insert(combined.end(), out.residual_forest.begin(), out.residual_forest.end());
  const auto combined_graph = Graph::from_edges(y_count, combined);
  out.combined_acyclic = combined_graph.edge_count() == combined.size() && is_acyclic(combined_graph);
  out.combined_free_intersection = free_intersection_check(y_count, p.accumulated_tree, out.residual_forest);
  if (options.strict && !(out.combined_acyclic && out.combined_free_intersection)) {
    throw CertificateError("treeify: accumulated tree and residual forest do not combine to a forest");
  }

  out.tree = contract(combined_graph, combined, p.gamma);
  const auto tree_graph = Graph::from_edges(g.vertex_count(), out.tree);
  out.acyclic = is_acyclic(tree_graph);
  out.spans_components = components(tree_graph).id == components(g).id;
  out.lipschitz = lipschitz_constant(g, tree_graph);
  return out;
}

}  // namespace quasitree
