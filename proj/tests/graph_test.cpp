#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wheelforge/graph.hpp"

using namespace wheelforge;

TEST_CASE("graph6 small graphs") {
  CHECK(parse_graph6("@").order() == 1);
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));
  CHECK(parse_graph6("C~") == Graph::complete(4));
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<C~") == Graph::complete(4));
}

TEST_CASE("graph6 round trip against reference encoder") {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 40; ++n) {
    Graph g = oracle::random_graph(n, 0.4, rng);
    std::string text = emit_graph6(g);
    CHECK(text == oracle::graph6(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 long size form") {
  std::mt19937_64 rng(3);
  Graph g = oracle::random_graph(64, 0.3, rng);
  std::string body = oracle::graph6(g).substr(1);
  std::string text = std::string(1, static_cast<char>(126)) + static_cast<char>(63) + static_cast<char>(64) +
                     static_cast<char>(63 + 0) + body;
  // 64 = 0b000000 000001 000000
  text = std::string{static_cast<char>(126), static_cast<char>(63), static_cast<char>(64), static_cast<char>(63)} + body;
  CHECK(parse_graph6(text) == g);
  CHECK_THROWS_AS(emit_graph6(g), UnsupportedSize);
}

TEST_CASE("graph6 malformed input reports offset") {
  try {
    parse_graph6("C~~");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // nonzero padding
}

TEST_CASE("edges and components") {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(g.size() == 3);
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4});
  CHECK(comps[2] == VertexSet{5});
  CHECK_FALSE(g.is_connected());
  CHECK(g.is_independent(VertexSet{0, 2, 3, 5}));
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(1, 6), DomainError);
}

TEST_CASE("named graphs") {
  CHECK(Graph::petersen().size() == 15);
  CHECK(Graph::octahedron().size() == 12);
  CHECK(Graph::icosahedron().size() == 30);
  for (int v = 0; v < 12; ++v) CHECK(Graph::icosahedron().degree(v) == 5);
  CHECK(Graph::wheel(5).degree(0) == 5);
  CHECK(Graph::grid(3, 3).size() == 12);
  CHECK(Graph::complete_bipartite(3, 3).size() == 9);
}

TEST_CASE("path system checks") {
  Graph g = Graph::cycle(5);
  CHECK(check_path_system(g, {{{0, 1, 2}, {3, 4}}}).empty());
  CHECK_FALSE(check_path_system(g, {{{0, 2}}}).empty());
  CHECK_FALSE(check_path_system(g, {{{0, 1, 2}, {2, 3}}}).empty());
  CHECK(check_path_system(g, {{{0, 1, 2}, {2, 3}}}, VertexSet{2}).empty());
  CHECK_FALSE(check_path_system(g, {{{0, 1, 0}}}).empty());
}

TEST_CASE("apply_edit") {
  Graph g = Graph::cycle(5);
  auto r = apply_edit(g, VertexSet{2}, {{1, 3}});
  CHECK(r.graph.order() == 4);
  CHECK(r.id_map[2] == -1);
  CHECK(r.graph.adjacent(r.id_map[1], r.id_map[3]));
  CHECK(r.graph.size() == 4);
  CHECK_THROWS_AS(apply_edit(g, VertexSet{2}, {{2, 4}}), InvalidEdit);
  CHECK_THROWS_AS(apply_edit(g, {}, {{0, 1}}), InvalidEdit);
}
