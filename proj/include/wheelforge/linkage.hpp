#pragma once

#include <array>
#include <optional>
#include <string>

#include "wheelforge/embedding.hpp"
#include "wheelforge/graph.hpp"

namespace wheelforge {

// Terminals in the order (s1, s2, t1, t2).
using Terminals = std::array<Vertex, 4>;

struct HypothesisCheck {
  bool holds = true;
  VertexSet separator;  // first violating S (smallest, then lexicographic)
  VertexSet component;  // terminal-free component of g - S
};

// Every component of g - S meets the terminals, for all |S| <= 3.
HypothesisCheck hypothesis_holds(const Graph& g, const Terminals& t);

struct LinkageResult {
  std::optional<PathSystem> paths;  // s1 -> t1, s2 -> t2
  bool planar = false;              // (g, s1, s2, t1, t2) is planar
  // Present with `planar` unless g is disconnected, in which case no single
  // outer walk carries all four terminals.
  std::optional<DiscEmbedding> witness;

  bool has_paths() const { return paths.has_value(); }
};

// Throws PreconditionError naming the separator when the hypothesis fails.
LinkageResult solve_two_linkage(const Graph& g, const Terminals& t);

// Empty when `r` is a valid certificate for the instance.
std::string check_linkage(const Graph& g, const Terminals& t, const LinkageResult& r);

}  // namespace wheelforge
