#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wheelforge/embedding.hpp"
#include "wheelforge/graph.hpp"

namespace wheelforge {

// A pair of edge-disjoint subgraphs covering the host, meeting in `cut`.
// Edges with both ends in the cut belong to side `cut_edges_side`.
struct Separation {
  VertexSet cut;
  VertexSet side1;  // includes cut
  VertexSet side2;  // includes cut
  int cut_edges_side = 1;

  // Vertex sets swapped; cut edges move with the new side 1.
  Separation swapped() const { return {cut, side2, side1, cut_edges_side}; }
  bool operator==(const Separation&) const = default;
};

enum class Side { first = 1, second = 2 };

// Edge list of one side under the cut-edge convention.
std::vector<Edge> side_edges(const Graph& g, const Separation& sep, Side side);
// Side as a standalone graph with ids re-densified (id_map old -> new).
Graph side_graph(const Graph& g, const Separation& sep, Side side, std::vector<int>* id_map = nullptr);

// Empty string when the separation satisfies the definition against g.
std::string check_separation(const Graph& g, const Separation& sep);

// Calls `sink` for each separation with |cut| = k, one per unordered split of
// the components of g - cut into two nonempty groups, skipping separations
// where neither side reaches `min_side_order`. Return false from `sink` to
// stop early.
void for_each_k_separation(const Graph& g, int k, int min_side_order,
                           const std::function<bool(const Separation&)>& sink);
std::vector<Separation> enumerate_k_separations(const Graph& g, int k, int min_side_order);

struct PlanarSide {
  Separation separation;  // oriented so side1 is the disc-planar side
  // Of side_graph(side1), ids in the side graph; omitted when the cut spans
  // several components of side 1.
  std::optional<DiscEmbedding> embedding;
  std::vector<int> id_map;  // host id -> side graph id
};

// Both orientations of every enumerated separation whose side 1 has at least
// `min_side_order` vertices and is disc-planar with the cut on the boundary.
void for_each_planar_side_separation(const Graph& g, int k, int min_side_order,
                                     const std::function<bool(const PlanarSide&)>& sink);
std::vector<PlanarSide> planar_side_separations(const Graph& g, int k, int min_side_order);

// No edge of the chosen side joins two cut vertices.
bool independent_cut(const Graph& g, const Separation& sep, Side side);

}  // namespace wheelforge
