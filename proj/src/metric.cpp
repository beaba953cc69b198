#include "quasitree/metric.hpp"

#include <algorithm>
#include <string>

#include "quasitree/errors.hpp"

namespace quasitree {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Components components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Components out;
  out.id.assign(n, -1);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.id[s] != -1) continue;
    const int cid = static_cast<int>(out.members.size());
    auto& members = out.members.emplace_back();
    out.id[s] = cid;
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (out.id[static_cast<std::size_t>(w)] == -1) {
          out.id[static_cast<std::size_t>(w)] = cid;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  for (Vertex s : sources) {
    check_vertex(g, s);
    if (dist[static_cast<std::size_t>(s)] == kUnreachable) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const int next = dist[static_cast<std::size_t>(v)] + 1;
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  const Vertex sources[] = {source};
  return bfs_distances(g, sources);
}

Extended distance(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, y);
  const int d = bfs_distances(g, x)[static_cast<std::size_t>(y)];
  return d == kUnreachable ? Extended::infinity() : Extended(d);
}

std::vector<Vertex> ball(const Graph& g, Vertex x, int r) {
  check_vertex(g, x);
  const auto dist = bfs_distances(g, x);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreachable && dist[v] <= r) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Extended metric_diameter(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) check_vertex(g, v);
  DistanceCache cache(g);
  const int d = cache.diameter(vertices);
  return d == kUnreachable ? Extended::infinity() : Extended(d);
}

Graph power_graph(const Graph& g, int k) {
  if (k < 1) throw GraphError("power_graph requires k >= 1");
  EdgeList edges;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < dist.size(); ++v) {
      if (dist[v] != kUnreachable && dist[v] <= k) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(g.vertex_count(), edges);
}

bool is_acyclic(const Graph& g) {
  return g.edge_count() + components(g).count() == g.vertex_count();
}

Extended lipschitz_constant(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) {
    throw GraphError("lipschitz_constant: vertex counts differ (" + std::to_string(g.vertex_count()) + " vs " +
                     std::to_string(h.vertex_count()) + ")");
  }
  std::int64_t l = 1;
  auto stretch = [&l](const Graph& edges_of, const Graph& metric_of) {
    DistanceCache cache(metric_of);
    for (const auto& [u, v] : edges_of.edges()) {
      const int d = cache(u, v);
      if (d == kUnreachable) return false;
      l = std::max<std::int64_t>(l, d);
    }
    return true;
  };
  if (!stretch(h, g) || !stretch(g, h)) return Extended::infinity();
  return l;
}

const std::vector<int>& DistanceCache::row(Vertex source) {
  auto& r = rows_[static_cast<std::size_t>(source)];
  if (r.empty() && graph_->vertex_count() > 0) r = bfs_distances(*graph_, source);
  return r;
}

int DistanceCache::diameter(std::span<const Vertex> vertices) {
  int best = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& r = row(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int d = r[static_cast<std::size_t>(vertices[j])];
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
  }
  return best;
}

bool DistanceCache::diameter_at_most(std::span<const Vertex> vertices, int bound) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& r = row(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int d = r[static_cast<std::size_t>(vertices[j])];
      if (d == kUnreachable || d > bound) return false;
    }
  }
  return true;
}

QiConstants quasi_isometry_constants(std::span<const Vertex> map, const Graph& source, const Graph& target,
                                     QiGrid grid) {
  const std::size_t n = source.vertex_count();
  if (map.size() != n) throw GraphError("quasi_isometry_constants: map is not total on the source");
  for (Vertex y : map) {
    if (!target.contains(y)) throw GraphError("quasi_isometry_constants: map image " + std::to_string(y) + " out of range");
  }

  QiConstants out;
  {
    const auto to_image = bfs_distances(target, map);
    for (int d : to_image) {
      if (d == kUnreachable) throw QuasiIsometryError("image is not coarsely dense: a target component misses it");
      out.codensity = std::max(out.codensity, d);
    }
  }

  // Distinct (d, d') pairs with both finite.
  std::vector<std::vector<char>> seen;
  for (std::size_t a = 0; a < n; ++a) {
    const auto ds = bfs_distances(source, static_cast<Vertex>(a));
    const auto dt = bfs_distances(target, map[a]);
    for (std::size_t b = a + 1; b < n; ++b) {
      const int d = ds[b];
      const int dp = dt[static_cast<std::size_t>(map[b])];
      if ((d == kUnreachable) != (dp == kUnreachable)) {
        throw QuasiIsometryError("distance finiteness not preserved for vertices " + std::to_string(a) + " and " +
                                 std::to_string(b));
      }
      if (d == kUnreachable) continue;
      if (static_cast<std::size_t>(d) >= seen.size()) seen.resize(static_cast<std::size_t>(d) + 1);
      auto& row = seen[static_cast<std::size_t>(d)];
      if (static_cast<std::size_t>(dp) >= row.size()) row.resize(static_cast<std::size_t>(dp) + 1, 0);
      row[static_cast<std::size_t>(dp)] = 1;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t d = 0; d < seen.size(); ++d) {
    for (std::size_t dp = 0; dp < seen[d].size(); ++dp) {
      if (seen[d][dp]) pairs.emplace_back(static_cast<int>(d), static_cast<int>(dp));
    }
  }

  for (int c = 0; c <= grid.max_c; ++c) {
    std::int64_t need = 1;
    bool feasible = true;
    for (const auto& [d, dp] : pairs) {
      // dp <= l d + c
      if (dp > c) need = std::max<std::int64_t>(need, (dp - c + d - 1) / d);
      // d <= l (dp + c)
      const int lower = dp + c;
      if (lower == 0) {
        feasible = false;
        break;
      }
      need = std::max<std::int64_t>(need, (d + lower - 1) / lower);
    }
    if (feasible && need <= grid.max_l) {
      out.l = static_cast<int>(need);
      out.c = c;
      return out;
    }
  }
  throw QuasiIsometryError("no (l, c) within l <= " + std::to_string(grid.max_l) + ", c <= " +
                           std::to_string(grid.max_c));
}

}  // namespace quasitree
