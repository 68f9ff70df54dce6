#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wheelforge/graph.hpp"
#include "wheelforge/wheels.hpp"

namespace wheelforge {

// Branch-vertex index pairs in path order: (0,1), (0,2), ..., (3,4).
inline constexpr std::array<std::pair<int, int>, 10> kBranchPairs{
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

struct SubdivisionCertificate {
  std::array<Vertex, 5> branch{};
  // paths[i] runs from branch[kBranchPairs[i].first] to branch[kBranchPairs[i].second].
  std::array<std::vector<Vertex>, 10> paths;

  bool operator==(const SubdivisionCertificate&) const = default;
};

// Empty when the certificate is a K5-subdivision in g; otherwise the first
// violation found.
std::string verify_k5_certificate(const Graph& g, const SubdivisionCertificate& cert);

// Backtracking search over branch sets of degree >= 4 vertices, highest
// degree first. Throws UnsupportedSize above order 12.
std::optional<SubdivisionCertificate> find_k5_subdivision(const Graph& g);

// The wheel, its four extension paths and two links between opposite
// extension ends combine into a K5-subdivision with branch vertices the
// center and the four spoke ends used. Throws AssemblyError on any clash.
SubdivisionCertificate assemble_k5(const Graph& g, const Wheel& wheel, const PathSystem& extension,
                                   const PathSystem& links);

}  // namespace wheelforge
