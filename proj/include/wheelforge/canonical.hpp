#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelforge/graph.hpp"

namespace wheelforge {

struct CanonicalLabeling {
  // order[i] is the vertex placed at canonical position i. Vertices of the
  // distinguished set occupy the first positions.
  std::vector<Vertex> order;
  Graph graph;  // g relabeled by `order`
  int distinguished = 0;
};

// Partition refinement plus individualization search with automorphism
// pruning. No order bound; intended for small graphs.
CanonicalLabeling canonical_labeling(const Graph& g, VertexSet distinguished = {});

// String equal for two (graph, boundary set) pairs iff they are isomorphic by
// a map carrying boundary onto boundary. Cyclic order of the boundary is not
// part of the key. Throws UnsupportedSize above order 12.
std::string canonical_form(const Graph& g, const std::optional<std::vector<Vertex>>& boundary = {});

// Same key without the order bound (used by enumerators that stay small).
std::string canonical_key(const Graph& g, VertexSet distinguished = {});

}  // namespace wheelforge
