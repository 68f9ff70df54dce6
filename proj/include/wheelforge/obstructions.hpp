#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelforge/graph.hpp"

namespace wheelforge {

// Configurations use vertices 0..4 as the boundary and 5.. as the interior.
inline constexpr int kObstructionBoundary = 5;

enum class DegreeFilter {
  strict,   // every interior vertex has degree >= 4
  flagged,  // degree 3 allowed next to the boundary; listed in `deficient`
};

struct ObstructionOptions {
  int max_interior = 4;
  DegreeFilter degree = DegreeFilter::flagged;
  // Every interior vertex has min(degree, 4) paths to the boundary sharing
  // only that vertex (the local trace of 4-connectivity of the ambient graph).
  bool require_fans = true;
  int jobs = 1;
};

struct ObstructionEntry {
  std::string id;
  Graph configuration;
  std::vector<Vertex> boundary;  // cyclic order on the outer walk
  int interior_order = 0;
  std::string canonical;
  std::vector<Vertex> deficient;  // interior vertices of degree 3

  int order() const { return configuration.order(); }
};

// Local filters other than the wheel test on a 4- or 5-vertex boundary:
// independent boundary, every boundary vertex attached, connected,
// disc-planar, nonempty interior, degree and fan conditions.
bool passes_local_filters(const Graph& g, const std::vector<Vertex>& boundary, const ObstructionOptions& opt);

// Some interior vertex is the center of a boundary-good wheel.
bool has_good_wheel(const Graph& g, const std::vector<Vertex>& boundary);

// Configurations with interior 1..max_interior passing the local filters and
// admitting no good wheel, grown one interior vertex at a time with
// disc-planarity as the hereditary filter. Sorted by order then canonical
// form; ids are "O<order>.<index>".
std::vector<ObstructionEntry> enumerate_obstructions(const ObstructionOptions& opt);
inline std::vector<ObstructionEntry> enumerate_obstructions(int max_interior) {
  ObstructionOptions opt;
  opt.max_interior = max_interior;
  return enumerate_obstructions(opt);
}

// Id of the entry isomorphic to (g, boundary) with boundary onto boundary.
std::optional<std::string> match_obstruction(const std::vector<ObstructionEntry>& catalog, const Graph& g,
                                             const std::vector<Vertex>& boundary);

}  // namespace wheelforge
