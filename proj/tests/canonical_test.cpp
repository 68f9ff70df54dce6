#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wheelforge/canonical.hpp"

using namespace wheelforge;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("class counts match brute force") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> keys;
    for (const Graph& g : oracle::all_labelled(n)) keys.insert(canonical_key(g));
    CHECK(keys.size() == oracle::all_unlabelled(n).size());
  }
}

TEST_CASE("labeling is an isomorphism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(n, 0.5, rng);
    auto lab = canonical_labeling(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(g.adjacent(lab.order[i], lab.order[j]) == lab.graph.adjacent(i, j));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_labeling(relabel(g, perm)).graph == lab.graph);
  }
}

TEST_CASE("distinguished vertices respected") {
  Graph p = Graph::path(3);
  CHECK(canonical_key(p, VertexSet{0}) != canonical_key(p, VertexSet{1}));
  CHECK(canonical_key(p, VertexSet{0}) == canonical_key(p, VertexSet{2}));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_graph(n, 0.5, rng);
    Graph h = oracle::random_graph(n, 0.5, rng);
    std::uint64_t mg = rng() & ((1U << n) - 1), mh = rng() & ((1U << n) - 1);
    bool same = canonical_key(g, VertexSet(mg)) == canonical_key(h, VertexSet(mh));
    CHECK(same == oracle::isomorphic(g, h, mg, mh));
  }
}

TEST_CASE("regular graphs with large automorphism groups") {
  std::mt19937_64 rng(1);
  for (const Graph& g : {Graph::petersen(), Graph::icosahedron(), Graph::complete_bipartite(4, 4)}) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(g) == canonical_key(relabel(g, perm)));
  }
  CHECK(canonical_key(Graph::petersen()) != canonical_key(Graph::icosahedron()));
}

TEST_CASE("canonical_form bounds") {
  CHECK_THROWS_AS(canonical_form(Graph(13)), UnsupportedSize);
  Graph c = Graph::cycle(5);
  CHECK(canonical_form(c, std::vector<Vertex>{0, 2}) == canonical_form(c, std::vector<Vertex>{1, 3}));
  CHECK(canonical_form(c, std::vector<Vertex>{0, 1}) != canonical_form(c, std::vector<Vertex>{0, 2}));
}
