#pragma once

// Random disc-planar fixtures shared by unit and acceptance tests.

#include <algorithm>
#include <random>
#include <vector>

#include "wheelforge/embedding.hpp"

namespace fixtures {

using namespace wheelforge;

struct DiscInstance {
  DiscEmbedding embedding;
  std::vector<Vertex> boundary;  // cyclic order on the outer walk
};

// Adds random edges while the graph stays disc-planar with vertices
// 0..boundary-1 on the boundary; boundary vertices stay independent when
// asked. `keep` is the chance of trying each candidate edge.
inline DiscInstance random_disc_instance(int n, int boundary, bool independent, double keep,
                                         std::mt19937_64& rng) {
  std::vector<Vertex> s(static_cast<std::size_t>(boundary));
  for (int i = 0; i < boundary; ++i) s[i] = i;
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(independent && v < boundary)) slots.emplace_back(u, v);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::bernoulli_distribution coin(keep);
  Graph g(n);
  for (auto [u, v] : slots) {
    if (!coin(rng)) continue;
    g.add_edge(u, v);
    if (!is_disc_planar(g, s, false).planar) g.remove_edge(u, v);
  }
  auto dp = is_disc_planar(g, s, false);
  // Boundary split across components: draw again.
  if (!dp.embedding) return random_disc_instance(n, boundary, independent, keep, rng);
  return {*dp.embedding, dp.embedding->boundary};
}

}  // namespace fixtures
