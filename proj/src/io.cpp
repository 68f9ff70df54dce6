#include "wheelforge/io.hpp"

#include <sstream>

#include "wheelforge/canonical.hpp"

namespace wheelforge {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON needs \"n\" and \"edges\"", 0);
  }
  int n = j.at("n").get<int>();
  if (n < 0 || n > Graph::kMaxOrder) throw UnsupportedSize("graph order " + std::to_string(n) + " out of range");
  Graph g(n);
  std::size_t i = 0;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair", i);
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("bad edge endpoint", i);
    g.add_edge(u, v);
    ++i;
  }
  return g;
}

Json to_json(const DiscEmbedding& e) {
  return {{"rotation", e.rotation}, {"outer_face", e.outer_face}, {"boundary", e.boundary}};
}

Json to_json(const Separation& s) {
  return {{"cut", s.cut.to_vector()},
          {"side1", s.side1.to_vector()},
          {"side2", s.side2.to_vector()},
          {"cut_edges_side", s.cut_edges_side}};
}

Json to_json(const Wheel& w) { return {{"center", w.center}, {"rim", w.rim}, {"spokes", w.spokes}}; }

Json to_json(const PathSystem& ps) { return ps.paths; }

Json to_json(const LinkageResult& r) {
  Json j;
  if (r.has_paths()) {
    j["kind"] = "paths";
    j["paths"] = to_json(*r.paths);
  } else {
    j["kind"] = "planar";
    if (r.witness) j["witness"] = to_json(*r.witness);
  }
  return j;
}

Json to_json(const SubdivisionCertificate& c) {
  Json paths = Json::object();
  for (std::size_t i = 0; i < kBranchPairs.size(); ++i) {
    auto [a, b] = kBranchPairs[i];
    paths[std::to_string(a) + "-" + std::to_string(b)] = c.paths[i];
  }
  return {{"branch", c.branch}, {"paths", paths}};
}

SubdivisionCertificate certificate_from_json(const Json& j) {
  SubdivisionCertificate c;
  auto branch = j.at("branch").get<std::vector<Vertex>>();
  if (branch.size() != 5) throw ParseError("branch needs five vertices", 0);
  std::copy(branch.begin(), branch.end(), c.branch.begin());
  for (std::size_t i = 0; i < kBranchPairs.size(); ++i) {
    auto [a, b] = kBranchPairs[i];
    c.paths[i] = j.at("paths").at(std::to_string(a) + "-" + std::to_string(b)).get<std::vector<Vertex>>();
  }
  return c;
}

Json to_json(const Coloring& c) {
  Json colors = Json::array();
  for (int x : c) colors.push_back(x == kUncolored ? Json(nullptr) : Json(x));
  return {{"colors", colors}};
}

Json catalog_to_json(const std::vector<ObstructionEntry>& catalog) {
  Json out = Json::array();
  for (const auto& e : catalog) {
    Json edges = Json::array();
    for (auto [u, v] : e.configuration.edges()) edges.push_back({u, v});
    out.push_back({{"id", e.id}, {"n", e.order()}, {"boundary", e.boundary}, {"edges", edges}});
  }
  return out;
}

std::vector<ObstructionEntry> catalog_from_json(const Json& j) {
  std::vector<ObstructionEntry> out;
  for (const auto& item : j) {
    ObstructionEntry e;
    e.id = item.at("id").get<std::string>();
    e.configuration = graph_from_json(item);
    e.boundary = item.at("boundary").get<std::vector<Vertex>>();
    if (e.boundary.size() != static_cast<std::size_t>(kObstructionBoundary)) {
      throw ParseError("catalog entry " + e.id + " needs a five-vertex boundary", 0);
    }
    VertexSet t = VertexSet::of(e.boundary);
    e.interior_order = e.configuration.order() - t.size();
    e.canonical = canonical_key(e.configuration, t);
    for (Vertex v : e.configuration.vertices() - t)
      if (e.configuration.degree(v) == 3) e.deficient.push_back(v);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Graph> read_graphs(std::istream& in, InputFormat format) {
  std::vector<Graph> out;
  if (format == InputFormat::graph6) {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
      out.push_back(parse_graph6(line));
    }
    return out;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    Json j = Json::parse(text);
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(graph_from_json(item));
    } else {
      out.push_back(graph_from_json(j));
    }
  } catch (const nlohmann::json::parse_error&) {
    // One object per line.
    std::istringstream lines(text);
    std::string line;
    std::size_t offset = 0;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        try {
          out.push_back(graph_from_json(Json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("invalid JSON graph: ") + e.what(), offset);
        }
      }
      offset += line.size() + 1;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON graph: ") + e.what(), 0);
  }
  return out;
}

}  // namespace wheelforge
