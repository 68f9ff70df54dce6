#include <doctest.h>

#include <random>

#include "instances.hpp"
#include "wheelforge/corpus.hpp"
#include "wheelforge/harness.hpp"

using namespace wheelforge;

namespace {

// Center 0 inside the rim 1..r, spokes as given, then boundary attachments.
Graph wheel_fixture(int rim, const std::vector<Vertex>& spokes, int extra,
                    const std::vector<std::pair<Vertex, std::vector<Vertex>>>& attach) {
  Graph g(1 + rim + extra);
  for (int i = 1; i <= rim; ++i) g.add_edge(i, i % rim + 1);
  for (Vertex s : spokes) g.add_edge(0, s);
  for (const auto& [t, nbrs] : attach)
    for (Vertex v : nbrs) g.add_edge(t, v);
  return g;
}

struct Classified {
  Graph g;
  Wheel wheel;
  ExtensionOutcome outcome;
};

Classified classify(const Graph& g, const std::vector<Vertex>& t, VertexSet s) {
  auto dp = is_disc_planar(g, t, false);
  REQUIRE(dp.embedding);
  auto verdict = wheel_at(*dp.embedding, 0);
  REQUIRE(verdict.defined());
  auto o = classify_extension_outcomes(*dp.embedding, t, s, *verdict.wheel);
  CHECK(check_outcome(g, VertexSet::of(t), s, *verdict.wheel, o) == "");
  return {g, *verdict.wheel, o};
}

}  // namespace

TEST_CASE("hajos preconditions") {
  auto k5 = check_hajos_preconditions(Graph::complete(5));
  CHECK_FALSE(k5.survives);
  CHECK(k5.k5.has_value());
  CHECK(verify_k5_certificate(Graph::complete(5), *k5.k5) == "");

  auto ico = check_hajos_preconditions(Graph::icosahedron());
  CHECK_FALSE(ico.survives);
  CHECK(*ico.five_connected);
  CHECK(ico.coloring.has_value());

  auto oct = check_hajos_preconditions(Graph::octahedron());
  CHECK_FALSE(oct.survives);
  CHECK(*oct.four_connected);
  CHECK_FALSE(*oct.five_connected);
  CHECK(oct.coloring.has_value());
  CHECK(oct.to_json()["minimality"] == "NOT CHECKED");

  auto lazy = check_hajos_preconditions(Graph::octahedron(), false);
  CHECK(lazy.first_failure == "4_colorable");
  CHECK_FALSE(lazy.four_connected.has_value());
}

TEST_CASE("outcome: spokes reach the boundary directly") {
  Graph g = wheel_fixture(4, {1, 2, 3, 4}, 5, {{5, {1}}, {6, {2}}, {7, {3}}, {8, {4}}, {9, {1}}});
  auto c = classify(g, {5, 6, 7, 8, 9}, {});
  CHECK(c.outcome.tag == OutcomeTag::s_extendable);
  REQUIRE(c.outcome.paths);
  CHECK(c.outcome.paths->paths.size() == 4);
}

TEST_CASE("outcome (i): boundary vertex on a rim edge between non-neighbors") {
  // s = 10 sees only the rim edge 2-3; neither end is a spoke.
  Graph g = wheel_fixture(8, {1, 4, 6, 8}, 5, {{9, {1}}, {10, {2, 3}}, {11, {4}}, {12, {6}}, {13, {8}}});
  auto c = classify(g, {9, 10, 11, 12, 13}, VertexSet{10});
  CHECK(c.outcome.tag == OutcomeTag::outcome_i);
  CHECK(c.outcome.s1 == 10);
  CHECK(VertexSet{c.outcome.a, c.outcome.b} == VertexSet{2, 3});
}

TEST_CASE("outcome (ii): a 3-separation through the center hides two boundary vertices") {
  // Spoke 4 and boundary vertices 10, 11 sit behind {0, rim vertices}.
  Graph g = wheel_fixture(8, {1, 4, 6, 8}, 5, {{9, {1}}, {10, {3, 4}}, {11, {4, 5}}, {12, {6}}, {13, {8}}});
  auto c = classify(g, {9, 10, 11, 12, 13}, VertexSet{10, 11});
  CHECK(c.outcome.tag == OutcomeTag::outcome_ii);
  REQUIRE(c.outcome.separation);
  CHECK(c.outcome.separation->cut.contains(0));
  CHECK((c.outcome.separation->side1 & c.g.neighbors(0)).size() == 1);

  // Tampering with the witness is caught.
  auto bad = c.outcome;
  bad.separation->side1.insert(1);
  bad.separation->side2 = bad.separation->side2 - VertexSet{1};
  CHECK(check_outcome(c.g, VertexSet{9, 10, 11, 12, 13}, VertexSet{10, 11}, c.wheel, bad) != "");
}

TEST_CASE("classification preconditions") {
  Graph g = wheel_fixture(4, {1, 2, 3, 4}, 5, {{5, {1}}, {6, {2}}, {7, {3}}, {8, {4}}, {9, {1}}});
  auto dp = is_disc_planar(g, {5, 6, 7, 8, 9}, false);
  REQUIRE(dp.embedding);
  auto w = *wheel_at(*dp.embedding, 0).wheel;
  CHECK_THROWS_AS(classify_extension_outcomes(*dp.embedding, {5, 6, 7, 8}, {}, w), PreconditionError);
  CHECK_THROWS_AS(classify_extension_outcomes(*dp.embedding, {5, 6, 7, 8, 9}, VertexSet{1}, w), PreconditionError);
}

TEST_CASE("random instances: every witness re-verifies") {
  std::mt19937_64 rng(7);
  int classified = 0;
  std::map<OutcomeTag, int> seen;
  for (int iter = 0; iter < 150; ++iter) {
    int n = 9 + static_cast<int>(rng() % 4);
    auto inst = fixtures::random_disc_instance(n, 5, true, 0.6, rng);
    VertexSet t = VertexSet::of(inst.boundary);
    for (const Wheel& w : find_good_wheels(inst.embedding, t)) {
      for (int trial = 0; trial < 3; ++trial) {
        VertexSet s;
        for (Vertex v : t)
          if (rng() % 2) s.insert(v);
        if (s.size() > 4) s = s - VertexSet::single(s.first());
        auto o = classify_extension_outcomes(inst.embedding, inst.boundary, s, w);
        CHECK(check_outcome(inst.embedding.host, t, s, w, o) == "");
        ++seen[o.tag];
        ++classified;
      }
    }
  }
  CHECK(classified > 50);
  MESSAGE("classified " << classified << ", S_EXTENDABLE " << seen[OutcomeTag::s_extendable] << ", NONE "
                        << seen[OutcomeTag::none]);
}

TEST_CASE("lemma reports") {
  VerifyOptions opt;
  opt.nmax = 6;
  auto corpus = default_corpus("L2LINK", opt);
  auto a = verify_lemma("L2LINK", corpus, opt);
  opt.jobs = 3;
  auto b = verify_lemma("L2LINK", corpus, opt);
  CHECK(a.pass());
  CHECK(a.instances > 0);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.to_json()["schema"] == "wheelforge/1");

  opt.nmax = 8;
  auto thm = verify_lemma("THM1", default_corpus("THM1", opt), opt);
  CHECK(thm.pass());
  std::size_t four = 0;
  for (int n = 5; n <= 8; ++n) four += k_connected_graphs(n, 4).size();
  CHECK(thm.instances == static_cast<long long>(four));

  opt.nmax = 8;
  CHECK(verify_lemma("LEXT5", default_corpus("LEXT5", opt), opt).pass());
  CHECK(verify_lemma("CONSEC", default_corpus("CONSEC", opt), opt).pass());

  opt.max_interior = 2;
  auto obs = verify_lemma("L5CUTOBS", default_corpus("L5CUTOBS", opt), opt);
  CHECK(obs.pass());
  CHECK(obs.outcomes["catalog"] > 0);

  CHECK_THROWS_AS(verify_lemma("NOPE", corpus, opt), UsageError);
  opt.boundary = std::vector<Vertex>{0, 1, 2, 3};
  CHECK_THROWS_AS(verify_lemma("L5CUTOBS", {}, opt), UsageError);
}
