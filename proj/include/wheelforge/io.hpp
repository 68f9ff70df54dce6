#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wheelforge/coloring.hpp"
#include "wheelforge/embedding.hpp"
#include "wheelforge/graph.hpp"
#include "wheelforge/linkage.hpp"
#include "wheelforge/obstructions.hpp"
#include "wheelforge/separations.hpp"
#include "wheelforge/subdivision.hpp"
#include "wheelforge/wheels.hpp"

namespace wheelforge {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "wheelforge/1";

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const DiscEmbedding& e);
Json to_json(const Separation& s);
Json to_json(const Wheel& w);
Json to_json(const PathSystem& ps);
Json to_json(const LinkageResult& r);
Json to_json(const SubdivisionCertificate& c);
SubdivisionCertificate certificate_from_json(const Json& j);
Json to_json(const Coloring& c);

Json catalog_to_json(const std::vector<ObstructionEntry>& catalog);
// Entries come back with their canonical keys recomputed.
std::vector<ObstructionEntry> catalog_from_json(const Json& j);

enum class InputFormat { graph6, json };

// graph6: one graph per nonempty line. json: one edge-list object, an array
// of them, or one object per line.
std::vector<Graph> read_graphs(std::istream& in, InputFormat format);

}  // namespace wheelforge
