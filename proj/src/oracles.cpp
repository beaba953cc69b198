#include "quasitree/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "quasitree/errors.hpp"

namespace quasitree::oracles {

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr int inf = 1 << 29;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) d[u][static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (d[a][m] + d[m][b] < d[a][b]) d[a][b] = d[a][m] + d[m][b];
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

namespace {

// Diameter of the vertices of `mask` (local indices into `local`), -1 if infinite.
int mask_diameter(std::uint32_t mask, const std::vector<Vertex>& local, const std::vector<std::vector<int>>& d) {
  int best = 0;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    for (std::size_t j = i + 1; j < local.size(); ++j) {
      if (!(mask >> j & 1U)) continue;
      const int x = d[static_cast<std::size_t>(local[i])][static_cast<std::size_t>(local[j])];
      if (x < 0) return -1;
      best = std::max(best, x);
    }
  }
  return best;
}

bool mask_within(std::uint32_t mask, int k, const std::vector<Vertex>& local, const std::vector<std::vector<int>>& d) {
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    for (std::size_t j = i + 1; j < local.size(); ++j) {
      if (!(mask >> j & 1U)) continue;
      const int x = d[static_cast<std::size_t>(local[i])][static_cast<std::size_t>(local[j])];
      if (x < 0 || x > k) return false;
    }
  }
  return true;
}

// Connected components by repeated neighbour sweeps.
std::vector<std::vector<Vertex>> naive_components(const Graph& g, const std::vector<std::vector<int>>& d) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> taken(g.vertex_count(), 0);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (taken[s]) continue;
    std::vector<Vertex> comp;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (d[s][v] >= 0) {
        comp.push_back(static_cast<Vertex>(v));
        taken[v] = 1;
      }
    }
    out.push_back(comp);
  }
  return out;
}

struct ComponentScan {
  std::vector<Vertex> local;
  std::vector<std::uint32_t> adjacency;  // local bitmask adjacency
};

ComponentScan scan_component(const Graph& g, const std::vector<Vertex>& comp) {
  ComponentScan s;
  s.local = comp;
  s.adjacency.assign(comp.size(), 0);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (std::size_t j = 0; j < comp.size(); ++j) {
      if (g.has_edge(comp[i], comp[j])) s.adjacency[i] |= std::uint32_t{1} << j;
    }
  }
  return s;
}

template <typename Visit>
void for_each_cut(const Graph& g, int k, BoundaryFilter filter, std::size_t max_component, Visit visit) {
  if (max_component > 30) throw GraphError("brute_cuts: component limit above 30 is not supported");
  const auto d = floyd_warshall(g);
  for (const auto& comp : naive_components(g, d)) {
    if (comp.size() < 2) continue;
    if (comp.size() > max_component) {
      throw GraphError("brute_cuts: component of size " + std::to_string(comp.size()) + " exceeds " +
                       std::to_string(max_component));
    }
    const auto scan = scan_component(g, comp);
    const std::uint32_t full = (std::uint32_t{1} << comp.size()) - 1;
    for (std::uint32_t side = 1; side < full; ++side) {
      std::uint32_t inner = 0;
      std::uint32_t outer = 0;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if ((side & bit) && (scan.adjacency[i] & ~side & full)) inner |= bit;
        if (!(side & bit) && (scan.adjacency[i] & side)) outer |= bit;
      }
      const bool keep = filter == BoundaryFilter::inner_and_outer
                            ? mask_within(inner | outer, k, scan.local, d)
                            : (mask_within(inner, k, scan.local, d) || mask_within(outer, k, scan.local, d));
      if (keep) visit(scan, side, full, d);
    }
  }
}

std::vector<Vertex> mask_to_side(const std::vector<Vertex>& local, std::uint32_t mask) {
  std::vector<Vertex> side;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (mask >> i & 1U) side.push_back(local[i]);
  }
  return side;
}

}  // namespace

SideList brute_cuts(const Graph& g, int k, BoundaryFilter filter, std::size_t max_component) {
  SideList out;
  for_each_cut(g, k, filter, max_component,
               [&](const ComponentScan& scan, std::uint32_t side, std::uint32_t, const auto&) {
                 out.push_back(mask_to_side(scan.local, side));
               });
  std::sort(out.begin(), out.end());
  return out;
}

BruteModulus brute_modulus(const Graph& g, int k, BoundaryFilter filter, std::size_t max_component) {
  BruteModulus m;
  bool first = true;
  for_each_cut(g, k, filter, max_component,
               [&](const ComponentScan& scan, std::uint32_t side, std::uint32_t full, const auto& d) {
                 ++m.cut_count;
                 const int a = mask_diameter(side, scan.local, d);
                 const int b = mask_diameter(full & ~side, scan.local, d);
                 const int r = std::min(a, b);
                 if (first || r > m.r) {
                   m.r = r;
                   m.witness = mask_to_side(scan.local, side);
                   first = false;
                 }
               });
  return m;
}

namespace {

// Reflexive-transitive closure of an edge list by Warshall's algorithm.
std::vector<std::vector<char>> closure(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = 1;
  for (const auto& [u, v] : edges) {
    r[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    r[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!r[a][m]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (r[m][b]) r[a][b] = 1;
      }
    }
  }
  return r;
}

bool search(std::vector<Vertex>& word, std::size_t length, const std::vector<std::vector<char>>& et,
            const std::vector<std::vector<char>>& eh) {
  const std::size_t step = word.size() - 1;  // index of the step about to be taken
  if (step == length) return word.back() == word.front();
  const auto& relation = step % 2 == 0 ? et : eh;
  const auto from = static_cast<std::size_t>(word.back());
  for (std::size_t next = 0; next < relation.size(); ++next) {
    if (next == from || !relation[from][next]) continue;
    word.push_back(static_cast<Vertex>(next));
    if (search(word, length, et, eh)) return true;
    word.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> brute_alternating_words(std::size_t vertex_count, const EdgeList& tree,
                                                           const EdgeList& remainder, std::size_t max_len) {
  if (vertex_count > 12 || max_len > 10) {
    throw GraphError("brute_alternating_words: bounds are 12 vertices and word length 10");
  }
  for (const auto& edges : {tree, remainder}) {
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count || static_cast<std::size_t>(v) >= vertex_count) {
        throw GraphError("brute_alternating_words: edge out of range");
      }
    }
  }
  const auto et = closure(vertex_count, tree);
  const auto eh = closure(vertex_count, remainder);
  for (std::size_t length = 2; length <= max_len; length += 2) {
    for (std::size_t start = 0; start < vertex_count; ++start) {
      std::vector<Vertex> word{static_cast<Vertex>(start)};
      if (search(word, length, et, eh)) return word;
    }
  }
  return std::nullopt;
}

std::size_t brute_separation_count(const Treeset& ts, Vertex x, Vertex y) {
  std::size_t count = 0;
  for (const Cut& c : ts.cuts()) {
    const auto& side = c.side();
    const bool has_x = std::find(side.begin(), side.end(), x) != side.end();
    const bool has_y = std::find(side.begin(), side.end(), y) != side.end();
    if (has_x && !has_y) ++count;
  }
  return count;
}

}  // namespace quasitree::oracles
