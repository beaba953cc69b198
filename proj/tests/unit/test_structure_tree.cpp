#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "quasitree/errors.hpp"
#include "quasitree/oracles.hpp"
#include "quasitree/structure_tree.hpp"

using namespace quasitree;
using fixtures::path;

namespace {

Treeset star_treeset() {
  const auto g = fixtures::triangle();
  return require_treeset(g, fixtures::cuts_of(g, {{0}, {1}, {2}, {1, 2}, {0, 2}, {0, 1}}));
}

std::vector<std::vector<Vertex>> orientation_sides(const StructureTree& st, const Treeset& ts, std::size_t u) {
  std::vector<std::vector<Vertex>> out;
  const auto& bits = st.vertices[u].cuts;
  for (auto c = bits.find_first(); c != VertexSet::npos; c = bits.find_next(c)) out.push_back(ts[c].side());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("structure tree of a path") {
  const auto g = path(4);
  const auto ts = require_treeset(g, enumerate_cuts(g, 1));
  const auto st = build_structure_tree(g, ts);
  CHECK(st.vertices.size() == 4);
  CHECK(st.edges.size() == 3);
  CHECK(st.tree_graph().max_degree() == 2);
  std::set<std::size_t> image(st.rho.begin(), st.rho.end());
  CHECK(image.size() == 4);
  CHECK(orientation_sides(st, ts, rho(st, 0)) == std::vector<std::vector<Vertex>>{{0}, {0, 1}, {0, 1, 2}});
  CHECK(tree_distance(st, rho(st, 0), rho(st, 3)) == 3);
  CHECK(tree_distance(st, rho(st, 2), rho(st, 2)) == 0);
  CHECK(validate_structure_tree(st, g, ts).ok());
}

TEST_CASE("structure tree of the triangle star treeset") {
  const auto g = fixtures::triangle();
  const auto ts = star_treeset();
  const auto st = build_structure_tree(g, ts);
  CHECK(st.vertices.size() == 4);
  CHECK(st.edges.size() == 3);
  const auto tree = st.tree_graph();
  std::size_t center = st.vertices.size();
  for (std::size_t u = 0; u < st.vertices.size(); ++u) {
    if (tree.degree(static_cast<Vertex>(u)) == 3) center = u;
  }
  REQUIRE(center < st.vertices.size());
  CHECK(orientation_sides(st, ts, center) == std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {1, 2}});
  for (Vertex x = 0; x < 3; ++x) CHECK(rho(st, x) != center);
  CHECK(orientation_sides(st, ts, rho(st, 1)) == std::vector<std::vector<Vertex>>{{0, 1}, {1}, {1, 2}});
  CHECK(tree_distance(st, rho(st, 0), rho(st, 1)) == 2);
  CHECK(oracles::brute_separation_count(ts, 0, 1) == 2);
  const auto report = validate_structure_tree(st, g, ts);
  CHECK(report.ok());
}

TEST_CASE("structure tree of an empty treeset") {
  const auto g = path(3);
  const auto st = build_structure_tree(g, Treeset{});
  CHECK(st.vertices.size() == 1);
  CHECK(st.edges.empty());
  CHECK(rho(st, 0) == rho(st, 2));
  CHECK(validate_structure_tree(st, g, Treeset{}).ok());
  const auto two = Graph::from_edges(4, EdgeList{{0, 1}, {2, 3}});
  const auto st2 = build_structure_tree(two, Treeset{});
  CHECK(st2.vertices.size() == 2);
  CHECK_THROWS_AS(tree_distance(st2, rho(st2, 0), rho(st2, 2)), GraphError);
}

TEST_CASE("corrupted structure tree is rejected") {
  const auto g = path(4);
  const auto ts = require_treeset(g, enumerate_cuts(g, 1));
  auto st = build_structure_tree(g, ts);
  st.edges.pop_back();
  const auto report = validate_structure_tree(st, g, ts);
  CHECK_FALSE(report.tree_per_component);
  CHECK_FALSE(report.edge_cut_bijection);
  CHECK_FALSE(report.ok());
}

TEST_CASE("structure trees of random treesets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 40);
    const auto g = fixtures::random_connected(rng, n, 4, static_cast<int>(rng() % 8));
    const int k = static_cast<int>(rng() % 3);
    const auto cs = enumerate_cuts(g, k);
    for (const auto& ts : partition_into_treesets(g, cs)) {
      const auto st = build_structure_tree(g, ts);
      CHECK(st.edges.size() == ts.pair_count());
      const auto report = validate_structure_tree(st, g, ts);
      CHECK(report.ok());
      for (const auto& f : report.failures) MESSAGE(f);
      for (Vertex x = 0; x < n; x += 3) {
        for (Vertex y = 0; y < n; y += 2) {
          CHECK(tree_distance(st, rho(st, x), rho(st, y)) == oracles::brute_separation_count(ts, x, y));
        }
      }
      // ρ is simplicial when every edge is separated by at most one cut.
      bool thin = true;
      for (const auto& [u, v] : g.edges()) thin = thin && separating_cuts(ts.cuts(), u, v).size() + separating_cuts(ts.cuts(), v, u).size() <= 2;
      if (thin) {
        const auto tree = st.tree_graph();
        std::set<Edge> image;
        for (const auto& [u, v] : g.edges()) {
          const auto a = static_cast<Vertex>(st.rho[static_cast<std::size_t>(u)]);
          const auto b = static_cast<Vertex>(st.rho[static_cast<std::size_t>(v)]);
          if (a != b) {
            CHECK(tree.has_edge(a, b));
            image.insert(normalized({a, b}));
          }
        }
        CHECK(image.size() == tree.edge_count());
      }
    }
  }
}
