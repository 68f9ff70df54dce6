#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelforge/graph.hpp"

namespace wheelforge {

// color[v] in {0,1,2,3}, or -1 when uncolored.
using Coloring = std::vector<int>;
inline constexpr int kUncolored = -1;

// Exact: a proper 4-coloring or none after exhausting the search.
// Throws UnsupportedSize above order 20.
std::optional<Coloring> four_color(const Graph& g);

struct GreedyResult {
  std::optional<Coloring> coloring;
  Vertex stuck = -1;  // first vertex with every color taken
};

// Colors `order` in sequence with the least color unused by colored
// neighbors. `order` must list each uncolored vertex exactly once.
GreedyResult greedy_extend(const Graph& g, const Coloring& partial, const std::vector<Vertex>& order);

// Empty when c is proper and total; otherwise the first conflicting edge or
// uncolored vertex.
std::string verify_coloring(const Graph& g, const Coloring& c);

}  // namespace wheelforge
