#include <doctest.h>

#include "fixtures.hpp"
#include "quasitree/errors.hpp"
#include "quasitree/io.hpp"

using namespace quasitree;

TEST_CASE("parse and emit graph documents") {
  const auto g = parse_graph(R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})");
  CHECK(g == fixtures::path(4));
  CHECK(emit_graph(g) == "{\"edges\":[[0,1],[1,2],[2,3]],\"n\":4}\n");
  const auto reversed = parse_graph(R"({"n":4,"edges":[[3,2],[1,0],[2,1]]})");
  CHECK(emit_graph(reversed) == emit_graph(g));
  CHECK(parse_graph(emit_graph(g)) == g);
  auto doc = parse_document(R"({"n":2,"edges":[[0,1]],"name":"p2","metadata":{"seed":3}})");
  CHECK(doc.name == std::optional<std::string>("p2"));
  CHECK(parse_document(emit_document(doc)).metadata == doc.metadata);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1],[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_graph("not json"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0]]})"), ParseError);
}

TEST_CASE("dot output") {
  const auto p4 = emit_dot(fixtures::path(4));
  CHECK(p4 == "graph G {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  1 -- 2;\n  2 -- 3;\n}\n");
  CHECK(emit_dot(Graph(0)) == "graph G {\n}\n");
  DotOptions split;
  split.tree_edges = EdgeList{{2, 3}};
  split.remainder_edges = EdgeList{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const auto dot = emit_dot(fixtures::two_triangles(), split);
  CHECK(dot.find("  2 -- 3 [class=T, color=red, penwidth=2];") != std::string::npos);
  CHECK(dot.find("  0 -- 1 [class=H, color=blue];") != std::string::npos);
  split.remainder_edges->push_back({2, 3});
  CHECK_THROWS_AS(emit_dot(fixtures::two_triangles(), split), GraphError);
}

TEST_CASE("family generators") {
  CHECK(generate(parse_family("path:4")) == fixtures::path(4));
  const auto g = generate(parse_family("grid:3x3"));
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    CHECK(generate(parse_family("tree_of_triangles:2", seed)) == fixtures::two_triangles());
  }
  CHECK(generate(parse_family("ladder:2x5")) == generate(parse_family("grid:2x5")));
  const auto t = generate(parse_family("tree_of_triangles:20", 5));
  CHECK(t.vertex_count() == 60);
  CHECK(t.edge_count() == 79);
  CHECK(t.max_degree() <= 3);
  const auto fp = generate(parse_family("free_product_ball:3"));
  CHECK(fp.vertex_count() == 1 + 3 + 4 + 6);
  CHECK(generate(parse_family("balanced_tree:2x3")).vertex_count() == 15);
  CHECK(generate(parse_family("subdivided_tree:2x2x1")).vertex_count() == 13);
  const auto chords = generate(parse_family("tree_with_chords:30", 4));
  CHECK(chords.vertex_count() == 30);
  CHECK(chords == generate(parse_family("tree_with_chords:30", 4)));
  CHECK(to_string(parse_family("grid:4x5")) == "grid:4x5");
  CHECK_THROWS_AS(parse_family("grid"), ParseError);
  CHECK_THROWS_AS(parse_family("grid:3xa"), ParseError);
  CHECK_THROWS_AS(generate(parse_family("nothing:3")), GraphError);
  CHECK_THROWS_AS(generate(parse_family("cycle:2")), GraphError);
}
