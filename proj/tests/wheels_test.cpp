#include <doctest.h>

#include <functional>
#include <random>

#include "instances.hpp"
#include "oracles.hpp"
#include "wheelforge/wheels.hpp"

using namespace wheelforge;

namespace {

DiscEmbedding disc(const Graph& g, const std::vector<Vertex>& s, bool ordered = true) {
  auto r = is_disc_planar(g, s, ordered);
  REQUIRE(r.embedding);
  return *r.embedding;
}

}  // namespace

TEST_CASE("wheel graph is its own wheel") {
  Graph w4 = Graph::wheel(4);
  auto e = disc(w4, {1, 2, 3, 4});
  auto v = wheel_at(e, 0);
  REQUIRE(v.defined());
  CHECK(v.wheel->rim.size() == 4);
  CHECK(v.wheel->spokes.size() == 4);
  CHECK(walk_has_cyclic_order(v.wheel->rim, {1, 2, 3, 4}));
  CHECK_THROWS_AS(wheel_at(e, 1), PreconditionError);
}

TEST_CASE("octahedron wheels") {
  Graph g = Graph::octahedron();
  // Face 0,2,4 as outer face; vertex 1 is interior.
  auto e = disc(g, {0, 2, 4}, false);
  auto v = wheel_at(e, 1);
  REQUIRE(v.defined());
  CHECK(VertexSet::of(v.wheel->rim) == g.neighbors(1));
  CHECK(v.wheel->spokes.size() == 4);
}

TEST_CASE("cut vertex breaks the rim") {
  // W4 on rim 1..4 plus a triangle 1-5-6 drawn inside the face 0-1-2, so the
  // closure of the center passes through 1 three times.
  Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {1, 6}, {5, 6}});
  Rotation rot{{1, 2, 3, 4}, {2, 6, 5, 0, 4}, {3, 0, 1}, {0, 2, 4}, {1, 0, 3}, {6, 1}, {5, 1}};
  validate_embedding(g, rot);
  auto fs = faces(g, rot);
  int outer = -1;
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (fs[f].walk.size() == 4 && VertexSet::of(fs[f].walk) == VertexSet{1, 2, 3, 4}) outer = static_cast<int>(f);
  REQUIRE(outer >= 0);
  DiscEmbedding e{g, rot, outer, fs[outer].walk};
  REQUIRE_NOTHROW(validate_disc_embedding(e));
  auto v = wheel_at(e, 0);
  CHECK_FALSE(v.defined());
  CHECK(v.violation.find("rim vertex 1") != std::string::npos);
}

TEST_CASE("goodness") {
  Wheel w{0, {1, 2, 3, 4, 5}, {1, 3, 5}};
  CHECK(is_good(w, VertexSet{7, 8}));
  CHECK(is_good(w, VertexSet{1, 3, 8}));
  CHECK_FALSE(is_good(w, VertexSet{2, 8}));
}

TEST_CASE("spoke extensions of W4") {
  Graph w4 = Graph::wheel(4);
  auto e = disc(w4, {1, 2, 3, 4});
  auto wh = *wheel_at(e, 0).wheel;
  auto r = is_extendable(e, wh, {1, 2, 3, 4}, VertexSet{1, 2, 3, 4});
  REQUIRE(r.extendable());
  CHECK(r.paths->paths == std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(check_extension(w4, wh, VertexSet{1, 2, 3, 4}, VertexSet{1, 2, 3, 4}, *r.paths).empty());
  CHECK_THROWS_AS(is_extendable(e, wh, {1, 2, 3}, {}), Infeasible);
  CHECK_THROWS_AS(is_extendable(e, wh, {1, 2, 3, 4}, VertexSet{5}), PreconditionError);
}

TEST_CASE("three-cut witness") {
  // Center 0 with rim 1..4; rim vertices feed through a 3-vertex layer
  // {5,6,7} to boundary 8..11 arranged outside.
  Graph g(12);
  for (int i = 1; i <= 4; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % 4 + 1);
  }
  g.add_edge(1, 5);
  g.add_edge(2, 6);
  g.add_edge(3, 7);
  g.add_edge(4, 7);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(5, 8);
  g.add_edge(5, 9);
  g.add_edge(6, 10);
  g.add_edge(7, 11);
  auto dp = is_disc_planar(g, {8, 9, 10, 11}, false);
  REQUIRE(dp.embedding);
  auto e = *dp.embedding;
  auto wh = *wheel_at(e, 0).wheel;
  auto r = is_extendable(e, wh, e.boundary, VertexSet{8, 9, 10, 11});
  CHECK_FALSE(r.extendable());
  CHECK(r.cut.size() <= 3);
  CHECK_FALSE(oracle::extendable(g, wh, VertexSet{8, 9, 10, 11}, VertexSet{8, 9, 10, 11}));
}

TEST_CASE("extendability matches exhaustive search") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 7 + static_cast<int>(rng() % 4);
    int b = 4 + static_cast<int>(rng() % 2);
    auto inst = fixtures::random_disc_instance(n, b, true, 0.8, rng);
    VertexSet t = VertexSet::of(inst.boundary);
    for (const auto& wh : find_good_wheels(inst.embedding, t)) {
      VertexSet s;
      for (Vertex v : t)
        if (rng() % 2) s.insert(v);
      if (s.size() > 4 && s != t) s.erase(s.first());
      auto r = is_extendable(inst.embedding, wh, inst.boundary, s);
      CHECK(r.extendable() == oracle::extendable(inst.embedding.host, wh, t, s));
      if (r.extendable()) {
        CHECK(check_extension(inst.embedding.host, wh, t, s, *r.paths).empty());
        // Monotone in s.
        for (Vertex v : s) {
          VertexSet smaller = s - VertexSet::single(v);
          CHECK(is_extendable(inst.embedding, wh, inst.boundary, smaller).extendable());
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("grid with corner boundary") {
  // In a 4x4 grid every interior wheel reaches a corner it is not adjacent
  // to; in a 5x5 grid the interior vertices diagonal to a corner are bad.
  Graph g4 = Graph::grid(4, 4);
  CHECK(find_good_wheels(disc(g4, {0, 3, 15, 12}), VertexSet{0, 3, 12, 15}).empty());
  Graph g5 = Graph::grid(5, 5);
  auto good = find_good_wheels(disc(g5, {0, 4, 24, 20}), VertexSet{0, 4, 20, 24});
  std::vector<Vertex> centers;
  for (const auto& w : good) centers.push_back(w.center);
  CHECK(centers == std::vector<Vertex>{7, 11, 12, 13, 17});
}
