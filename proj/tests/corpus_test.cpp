#include <doctest.h>

#include "oracles.hpp"
#include "wheelforge/corpus.hpp"
#include "wheelforge/paths.hpp"

using namespace wheelforge;

TEST_CASE("graph counts") {
  // Known class counts for orders 0..8.
  std::vector<std::size_t> expect{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) CHECK(all_graphs(n).size() == expect[n]);
}

TEST_CASE("connected classes match brute force") {
  for (int n = 2; n <= 6; ++n) {
    auto reps = oracle::all_unlabelled(n);
    for (int k = 1; k <= 4; ++k) {
      std::size_t want = 0;
      for (const Graph& g : reps)
        if (oracle::k_connected(g, k)) ++want;
      auto got = k_connected_graphs(n, k);
      CHECK(got.size() == want);
      for (const Graph& g : got) CHECK(oracle::k_connected(g, k));
    }
  }
}

TEST_CASE("connected and k-connected counts") {
  // Connected graphs 2..8 and 2-connected graphs 3..8 (published counts).
  // K1 is not 1-connected since k-connectivity needs more than k vertices.
  CHECK(k_connected_graphs(1, 1).empty());
  std::vector<std::size_t> connected{1, 2, 6, 21, 112, 853, 11117};
  for (int n = 2; n <= 8; ++n) CHECK(k_connected_graphs(n, 1).size() == connected[n - 2]);
  std::vector<std::size_t> biconnected{1, 3, 10, 56, 468, 7123};
  for (int n = 3; n <= 8; ++n) CHECK(k_connected_graphs(n, 2).size() == biconnected[n - 3]);
  std::vector<std::size_t> triconnected{1, 3, 17, 136, 2388};
  for (int n = 4; n <= 8; ++n) CHECK(k_connected_graphs(n, 3).size() == triconnected[n - 4]);
}

TEST_CASE("four-connected fast test agrees with flow test") {
  for (int n = 5; n <= 8; ++n)
    for (const Graph& g : k_connected_graphs(n, 4)) CHECK(is_k_connected(g, 4));
}
