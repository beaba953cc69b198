#include <algorithm>
#include <string>

#include "quasitree/decompose.hpp"
#include "quasitree/errors.hpp"

namespace quasitree {

SubdivisionResult subdivide(const Graph& g, const Treeset& ts) {
  const std::size_t n = g.vertex_count();
  if (!ts.empty() && ts.vertex_count() != n) throw CutError("subdivide: treeset belongs to a graph of different size");

  struct EdgePlan {
    Edge edge;
    std::vector<std::size_t> chain;  // C_0 ⊊ ... ⊊ C_m, all containing x0 and not x1
    Vertex first_new = 0;            // ids of y_1..y_m are first_new + i - 1
  };
  std::vector<EdgePlan> plans;
  SubdivisionResult out;
  EdgeList edges;
  Vertex next = static_cast<Vertex>(n);

  for (const auto& e : g.edges()) {
    const auto [x0, x1] = e;
    std::vector<std::size_t> chain;
    for (std::size_t c = 0; c < ts.size(); ++c) {
      if (ts[c].contains(x0) && !ts[c].contains(x1)) chain.push_back(c);
    }
    std::sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) { return ts[a].size() < ts[b].size(); });
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& lo = ts[chain[i - 1]];
      const auto& hi = ts[chain[i]];
      if (lo.size() == hi.size() || !lo.members().is_subset_of(hi.members())) {
        throw CertificateError("subdivide: cuts separating " + std::to_string(x0) + " from " + std::to_string(x1) +
                               " are not a chain (" + to_string(lo) + ", " + to_string(hi) + ")");
      }
    }
    if (!chain.empty()) out.chain_lengths[e] = chain.size();
    out.max_chain = std::max(out.max_chain, chain.size());
    if (chain.size() <= 1) {
      edges.push_back(e);
      continue;
    }
    EdgePlan plan{e, chain, next};
    const auto inserted = static_cast<Vertex>(chain.size() - 1);
    Vertex prev = x0;
    for (Vertex i = 0; i < inserted; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, x1);
    plans.push_back(std::move(plan));
  }

  const auto y_count = static_cast<std::size_t>(next);
  out.graph = Graph::from_edges(y_count, edges);
  out.gamma.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.gamma[x] = static_cast<Vertex>(x);
  out.lambda.resize(y_count);
  for (std::size_t x = 0; x < n; ++x) out.lambda[x] = static_cast<Vertex>(x);

  std::vector<VertexSet> lifted(ts.size());
  for (std::size_t c = 0; c < ts.size(); ++c) {
    lifted[c] = ts[c].members();
    lifted[c].resize(y_count);
  }
  std::vector<std::ptrdiff_t> position(ts.size(), -1);
  for (const auto& plan : plans) {
    const auto [x0, x1] = plan.edge;
    const std::size_t m = plan.chain.size() - 1;
    for (std::size_t i = 1; i <= m; ++i) {
      const std::size_t to_x1 = m + 1 - i;
      out.lambda[static_cast<std::size_t>(plan.first_new) + i - 1] = i <= to_x1 ? x0 : x1;
    }
    for (std::size_t j = 0; j < plan.chain.size(); ++j) position[plan.chain[j]] = static_cast<std::ptrdiff_t>(j);
    for (std::size_t c = 0; c < ts.size(); ++c) {
      const bool has0 = ts[c].contains(x0);
      const bool has1 = ts[c].contains(x1);
      if (!has0 && !has1) continue;
      for (std::size_t i = 1; i <= m; ++i) {
        bool inside = true;
        if (has0 && !has1) {
          inside = static_cast<std::ptrdiff_t>(i) <= position[c];
        } else if (!has0 && has1) {
          inside = static_cast<std::ptrdiff_t>(i) > position[ts.complement_of(c)];
        }
        if (inside) lifted[c].set(static_cast<std::size_t>(plan.first_new) + i - 1);
      }
    }
    for (std::size_t c : plan.chain) position[c] = -1;
  }

  const CutBuilder builder(out.graph);
  Cutset cuts;
  cuts.reserve(ts.size());
  for (const auto& side : lifted) cuts.push_back(builder.make(side));
  out.lifted = require_treeset(out.graph, cuts);
  out.lift.resize(ts.size());
  for (std::size_t c = 0; c < ts.size(); ++c) {
    if (!(out.lifted[c] == cuts[c])) throw CertificateError("subdivide: lift is not injective");
    out.lift[c] = c;
  }

  for (const auto& [u, v] : out.graph.edges()) {
    std::size_t separating = 0;
    for (const auto& c : out.lifted.cuts()) separating += c.contains(u) != c.contains(v);
    if (separating > 2) {
      throw CertificateError("subdivide: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is separated by more than one lifted cut");
    }
  }
  for (std::size_t c = 0; c < ts.size(); ++c) {
    const auto reach = bfs_distances(out.graph, ts[c].inner_boundary());
    for (Vertex y : out.lifted[c].inner_boundary()) {
      const int d = reach[static_cast<std::size_t>(y)];
      if (d == kUnreachable || static_cast<std::size_t>(d) > out.max_chain) {
        throw CertificateError("subdivide: inner boundary of lifted " + to_string(out.lifted[c]) +
                               " leaves the ball around the original boundary");
      }
    }
  }
  return out;
}

}  // namespace quasitree
