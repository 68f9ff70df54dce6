#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelforge/embedding.hpp"
#include "wheelforge/graph.hpp"

namespace wheelforge {

// Center plus rim cycle; the rim is stored in clockwise order starting at its
// smallest vertex. Every neighbor of the center lies on the rim.
struct Wheel {
  Vertex center = -1;
  std::vector<Vertex> rim;
  std::vector<Vertex> spokes;  // rim vertices adjacent to the center, clockwise

  VertexSet vertices() const;
  VertexSet spoke_set() const { return VertexSet::of(spokes); }
  bool operator==(const Wheel&) const = default;
};

struct WheelVerdict {
  std::optional<Wheel> wheel;
  std::string violation;  // set when the cofacial closure is not a wheel

  bool defined() const { return wheel.has_value(); }
};

// The vertices and edges cofacial with w, checked against the wheel shape.
// Throws PreconditionError when w lies on the outer face.
WheelVerdict wheel_at(const DiscEmbedding& e, Vertex w);

// Every t-vertex of the wheel is adjacent to the center.
bool is_good(const Wheel& wheel, VertexSet t);

// Good wheels centered at non-boundary vertices off the outer face, by center.
std::vector<Wheel> find_good_wheels(const DiscEmbedding& e, VertexSet t);

struct ExtensionResult {
  std::optional<PathSystem> paths;  // four paths from the center, by endpoint
  // Failure witness in the reduced graph (host minus the center and the rim
  // vertices that are not spoke ends): separates the spoke ends from t.
  VertexSet cut;
  int max_routable = 0;
  bool mandatory_shortfall = false;

  bool extendable() const { return paths.has_value(); }
};

// Four paths from the center to t meeting only at the center, each meeting
// the wheel in exactly one vertex besides the center, with every s-vertex an
// endpoint. Among valid systems the sorted endpoint set is lexicographically
// smallest. With |t| = 5 and s = t the coverage condition is dropped (four
// paths cannot end at five vertices).
ExtensionResult is_extendable(const DiscEmbedding& e, const Wheel& wheel, const std::vector<Vertex>& t,
                              VertexSet s);

// Empty when `ps` satisfies the extension definition for (wheel, t, s),
// with the same s = t convention as is_extendable.
std::string check_extension(const Graph& host, const Wheel& wheel, VertexSet t, VertexSet s,
                            const PathSystem& ps);

}  // namespace wheelforge
