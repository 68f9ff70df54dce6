#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wheelforge/graph.hpp"

namespace wheelforge {

// Cyclic neighbor order per vertex. A face is traced by following dart
// (u, v) to (v, w) where w follows u in the rotation at v.
using Rotation = std::vector<std::vector<Vertex>>;

// Closed boundary walk; walk[i] -> walk[i+1] (cyclically) are the darts of
// the face. An isolated vertex has a face whose walk is just that vertex.
// Walks may repeat vertices when the host is not 2-connected.
struct Face {
  std::vector<Vertex> walk;

  bool contains(Vertex v) const;
  bool has_dart(Vertex u, Vertex v) const;
};

struct Embedding {
  Graph host;
  Rotation rotation;
};

// Plane embedding with a designated outer face carrying the boundary.
// "Clockwise" is the orientation in which the outer walk meets the boundary
// in stored order.
struct DiscEmbedding {
  Graph host;
  Rotation rotation;
  int outer_face = 0;
  std::vector<Vertex> boundary;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<Embedding> embedding;
  std::string note;  // obstruction description when not planar
};

struct DiscPlanarityResult {
  bool planar = false;
  // Omitted when planar but the boundary spans several components (no single
  // face walk can carry it).
  std::optional<DiscEmbedding> embedding;
  std::string note;
};

PlanarityResult is_planar(const Graph& g);

// Unordered: g plus an apex joined to s is planar. Ordered: g plus a
// subdivided cycle through s in the given order plus an apex joined to s is
// planar.
DiscPlanarityResult is_disc_planar(const Graph& g, const std::vector<Vertex>& s,
                                   bool fixed_cyclic_order);

// Faces in tracing order (vertices ascending, darts in rotation order).
// Throws InconsistentEmbedding when the rotation does not match the host.
std::vector<Face> faces(const Graph& host, const Rotation& rotation);
std::vector<Face> faces(const DiscEmbedding& e);

// Rotation consistency plus the genus-zero Euler count on every component.
void validate_embedding(const Graph& host, const Rotation& rotation);
// Adds: outer face exists and carries the boundary in cyclic order.
void validate_disc_embedding(const DiscEmbedding& e);

// True when `walk` (cyclic, possibly repeating vertices) visits `order` as a
// cyclic subsequence.
bool walk_has_cyclic_order(const std::vector<Vertex>& walk, const std::vector<Vertex>& order);

Rotation mirror(const Rotation& r);

using Element = std::variant<Vertex, Edge>;

bool cofacial(const DiscEmbedding& e, const Element& x, const Element& y);
// Faces incident with a vertex or an edge.
std::vector<int> incident_faces(const std::vector<Face>& fs, const Element& x);

// The cycle (given as a vertex sequence in either direction) rotated to the
// clockwise direction.
std::vector<Vertex> clockwise_cycle(const DiscEmbedding& e, const std::vector<Vertex>& cycle);

// uCv: u when u == v, otherwise the clockwise subpath of the cycle from u to v.
std::vector<Vertex> clockwise_subpath(const DiscEmbedding& e, const std::vector<Vertex>& cycle,
                                      Vertex u, Vertex v);

}  // namespace wheelforge
