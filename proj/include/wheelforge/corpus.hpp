#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wheelforge/graph.hpp"

namespace wheelforge {

// Isomorphism-class representatives, each in canonical labeling, sorted by
// graph6. Orders up to 10 are practical.
std::vector<Graph> all_graphs(int n);

// k-connected classes on n vertices (k = 1 gives connected graphs). Every
// k-connected graph minus a vertex of minimum degree is (k-1)-connected, so
// each level extends the one below by a vertex of minimum degree.
std::vector<Graph> k_connected_graphs(int n, int k);

// Upper-triangle adjacency bits of a graph of order <= 11.
std::uint64_t pack_upper(const Graph& g);

}  // namespace wheelforge
