#pragma once

#include <random>
#include <vector>

#include "quasitree/cuts.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/io.hpp"

namespace fixtures {

using namespace quasitree;

inline Graph path(int n) { return generate({"path", {n}, 0}); }
inline Graph cycle(int n) { return generate({"cycle", {n}, 0}); }
inline Graph two_triangles() { return Graph::from_edges(6, EdgeList{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }
inline Graph triangle() { return generate({"complete", {3}, 0}); }

inline std::vector<std::vector<Vertex>> sides(const Cutset& cs) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cs) out.push_back(c.side());
  std::sort(out.begin(), out.end());
  return out;
}

inline Cutset cuts_of(const Graph& g, const std::vector<std::vector<Vertex>>& list) {
  Cutset out;
  for (const auto& s : list) out.push_back(cut_from_side(g, s));
  return out;
}

// Connected random graph: random spanning tree plus extra edges, degrees capped.
inline Graph random_connected(std::mt19937_64& rng, int n, int max_degree, int extra) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  EdgeList e;
  for (int v = 1; v < n; ++v) {
    for (int tries = 0; tries < 64; ++tries) {
      const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      if (deg[static_cast<std::size_t>(u)] < max_degree) {
        e.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        break;
      }
    }
    if (deg[static_cast<std::size_t>(v)] == 0) {
      e.emplace_back(v - 1, v);
      ++deg[static_cast<std::size_t>(v - 1)];
      ++deg[static_cast<std::size_t>(v)];
    }
  }
  auto g = Graph::from_edges(static_cast<std::size_t>(n), e);
  for (int i = 0; i < extra; ++i) {
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v || g.has_edge(u, v) || deg[static_cast<std::size_t>(u)] >= max_degree ||
        deg[static_cast<std::size_t>(v)] >= max_degree) {
      continue;
    }
    e.emplace_back(u, v);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    g = Graph::from_edges(static_cast<std::size_t>(n), e);
  }
  return g;
}

}  // namespace fixtures
