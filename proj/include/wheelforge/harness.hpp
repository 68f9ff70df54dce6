#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheelforge/coloring.hpp"
#include "wheelforge/embedding.hpp"
#include "wheelforge/io.hpp"
#include "wheelforge/obstructions.hpp"
#include "wheelforge/separations.hpp"
#include "wheelforge/subdivision.hpp"
#include "wheelforge/wheels.hpp"

namespace wheelforge {

// Conditions a counterexample to Hajós' conjecture for K5 must meet.
// Fields left empty were not evaluated because an earlier one already
// failed (only when `exhaustive` is false).
struct HajosCheck {
  std::optional<bool> four_connected;
  std::optional<bool> five_connected;
  std::optional<SubdivisionCertificate> k5;
  std::optional<Coloring> coloring;
  bool k5_checked = false;
  bool coloring_checked = false;
  bool survives = false;
  std::string first_failure;  // empty when the graph survives

  Json to_json() const;
};

// Minimality is never checked. With exhaustive = false the checks run
// cheapest-first (4-colorability, K5, connectivity) and stop at the first
// failure.
HajosCheck check_hajos_preconditions(const Graph& g, bool exhaustive = true);

enum class OutcomeTag { s_extendable, outcome_i, outcome_ii, outcome_iii, outcome_iv, none };

std::string to_string(OutcomeTag tag);

struct ExtensionOutcome {
  OutcomeTag tag = OutcomeTag::none;
  std::optional<PathSystem> paths;  // S_EXTENDABLE
  Vertex s1 = -1, s2 = -1;          // (i) uses s1 only
  Vertex a = -1, b = -1, c = -1;
  std::optional<Separation> separation;  // (ii)-(iv): side1 is H1

  Json to_json() const;
};

// `h` is the disc embedding of H, `t` its five boundary vertices, `s` the
// mandatory subset. Outcomes are tried in the order S_EXTENDABLE, (i), (ii),
// (iii), (iv); each search is exhaustive and the first witness is kept.
ExtensionOutcome classify_extension_outcomes(const DiscEmbedding& h, const std::vector<Vertex>& t, VertexSet s,
                                             const Wheel& wheel);

// Empty when the witness meets the definition of its tag.
std::string check_outcome(const Graph& h, VertexSet t, VertexSet s, const Wheel& wheel, const ExtensionOutcome& o);

struct Counterexample {
  Graph graph;
  Json certificate;
};

struct LemmaReport {
  std::string lemma;
  long long instances = 0;
  std::map<std::string, long long> outcomes;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;

  bool pass() const { return counterexamples.empty(); }
  // Deterministic unless include_timing is set.
  Json to_json(bool include_timing = true) const;
};

struct VerifyOptions {
  int nmin = 1;
  int nmax = 7;
  int jobs = 1;
  std::uint64_t seed = 1;
  int max_interior = 4;  // L5CUTOBS generated configurations
  ObstructionOptions obstruction;
  std::optional<std::vector<ObstructionEntry>> catalog;  // L5CUTOBS; enumerated when absent
  std::optional<std::vector<Vertex>> boundary;           // L5CUTOBS on supplied configurations
};

const std::vector<std::string>& lemma_ids();

// The corpus the lemma runs over when none is supplied: all graphs (L2LINK),
// 4-connected graphs (THM1, LEXT5, CONSEC) with nmin <= order <= nmax, or
// boundary configurations with interior up to max_interior (L5CUTOBS).
std::vector<Graph> default_corpus(const std::string& lemma, const VerifyOptions& opt);

// Throws UsageError for an unknown id.
LemmaReport verify_lemma(const std::string& lemma, const std::vector<Graph>& corpus, const VerifyOptions& opt);

}  // namespace wheelforge
