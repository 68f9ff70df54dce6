#pragma once

#include <optional>

#include "wheelforge/graph.hpp"

namespace wheelforge {

// Outcome of a vertex-disjoint routing request.
struct Routing {
  // Engaged when k disjoint source-to-sink paths covering every mandatory
  // sink were found. Each path runs from a source to a sink; a vertex in both
  // sets yields a single-vertex path.
  std::optional<PathSystem> paths;
  // On failure: a vertex set meeting every path from the sources to the
  // relevant sinks, of size `max_routable` (or smaller than the number of
  // mandatory sinks when those could not all be reached).
  VertexSet cut;
  // Maximum number of pairwise disjoint source-to-sink paths.
  int max_routable = 0;
  // True when the failure is a mandatory-sink coverage failure rather than a
  // shortage of paths.
  bool mandatory_shortfall = false;

  bool routed() const { return paths.has_value(); }
};

// k pairwise vertex-disjoint paths from `sources` to `sinks` in the subgraph
// induced by `allowed`, with every vertex of `mandatory_sinks` the endpoint of
// some path. Unit vertex capacities via vertex splitting.
// Throws Infeasible when k exceeds |sources| or |sinks|.
Routing disjoint_paths(const Graph& g, VertexSet sources, VertexSet sinks, int k,
                       VertexSet mandatory_sinks = {}, std::optional<VertexSet> allowed = {});

// Maximum number of internally disjoint u-v paths for nonadjacent u, v.
int local_connectivity(const Graph& g, Vertex u, Vertex v, int cap = Graph::kMaxOrder);

// order > k and no set of fewer than k vertices disconnects g.
bool is_k_connected(const Graph& g, int k);

// Largest k with is_k_connected(g, k) (n-1 for complete graphs).
int connectivity(const Graph& g);

}  // namespace wheelforge
