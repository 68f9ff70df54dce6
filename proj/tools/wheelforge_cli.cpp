#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wheelforge/canonical.hpp"
#include "wheelforge/coloring.hpp"
#include "wheelforge/embedding.hpp"
#include "wheelforge/harness.hpp"
#include "wheelforge/io.hpp"
#include "wheelforge/linkage.hpp"
#include "wheelforge/obstructions.hpp"
#include "wheelforge/separations.hpp"
#include "wheelforge/subdivision.hpp"
#include "wheelforge/wheels.hpp"

namespace fs = std::filesystem;
using namespace wheelforge;

namespace {

struct Globals {
  std::string input;
  std::string format;
  std::string boundary;
  std::string out;
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = 1;
};

std::vector<Vertex> parse_list(const std::string& text, const char* flag) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + ": not a vertex list: " + text);
    }
  }
  return out;
}

std::vector<Graph> load(const Globals& g) {
  if (g.input.empty()) throw UsageError("--input is required");
  InputFormat fmt = InputFormat::graph6;
  if (g.format == "json" || (g.format.empty() && g.input.size() > 5 && g.input.ends_with(".json"))) {
    fmt = InputFormat::json;
  } else if (!g.format.empty() && g.format != "graph6") {
    throw UsageError("--format must be graph6 or json");
  }
  if (g.input == "-") return read_graphs(std::cin, fmt);
  std::ifstream in(g.input);
  if (!in) throw UsageError("cannot open " + g.input);
  return read_graphs(in, fmt);
}

std::vector<Vertex> need_boundary(const Globals& g, const Graph& graph) {
  if (g.boundary.empty()) throw UsageError("--boundary is required");
  auto b = parse_list(g.boundary, "--boundary");
  for (Vertex v : b)
    if (v >= graph.order()) throw UsageError("--boundary vertex " + std::to_string(v) + " out of range");
  return b;
}

// Percent-encodes everything outside [A-Za-z0-9_-] so canonical keys make
// safe file names.
std::string file_name(const Graph& g, VertexSet distinguished) {
  std::string key = canonical_key(g, distinguished), out;
  static const char* hex = "0123456789ABCDEF";
  for (unsigned char c : key) {
    if (std::isalnum(c) || c == '_' || c == '-') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out + ".json";
}

void persist(const Globals& g, const Graph& graph, const Json& j, VertexSet distinguished = {}) {
  if (g.out.empty()) return;
  fs::create_directories(g.out);
  std::ofstream f(fs::path(g.out) / file_name(graph, distinguished));
  f << j.dump(2) << "\n";
}

void emit(const Globals& g, Json j) {
  if (!j.contains("schema")) j["schema"] = kSchema;
  std::cout << (g.json ? j.dump() : j.dump(2)) << "\n";
}

Json header(std::size_t index, const Graph& graph) {
  return {{"schema", kSchema}, {"index", index}, {"graph6", emit_graph6(graph)}};
}

// Runs `one` per input graph; exit 0 when every verdict is positive.
int each(const Globals& g, const std::function<bool(const Graph&, Json&)>& one) {
  auto graphs = load(g);
  bool all = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json j = header(i, graphs[i]);
    all = one(graphs[i], j) && all;
    persist(g, graphs[i], j);
    emit(g, j);
  }
  return all ? 0 : 1;
}

DegreeFilter parse_degree(const std::string& s) {
  if (s == "strict") return DegreeFilter::strict;
  if (s == "flagged") return DegreeFilter::flagged;
  throw UsageError("--degree must be strict or flagged");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wheelforge: wheels, linkages and K5-subdivisions in small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.input, "graph6 or JSON file, - for stdin");
  app.add_option("--format", g.format, "graph6 | json");
  app.add_option("--boundary", g.boundary, "comma-separated boundary vertices");
  app.add_option("--out", g.out, "directory for per-instance certificates (catalog file for obstructions)");
  app.add_flag("--json", g.json, "compact single-line JSON output");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled corpora");

  auto* planarity = app.add_subcommand("planarity", "planar embedding or obstruction note");
  auto* disc = app.add_subcommand("disc-planarity", "embedding with the boundary on one face");
  bool ordered = false;
  disc->add_flag("--ordered", ordered, "boundary must appear in the given cyclic order");
  auto* seps = app.add_subcommand("separations", "k-separations");
  int k = 3, min_side = 0;
  bool planar_side = false;
  seps->add_option("--k", k, "cut size")->required();
  seps->add_option("--min-side", min_side, "minimum order of the larger side");
  seps->add_flag("--planar-side", planar_side, "only separations with a disc-planar side");
  auto* wheels = app.add_subcommand("wheels", "wheels and boundary-good wheels");
  auto* extend = app.add_subcommand("extend", "extension paths from a wheel to the boundary");
  int center = -1;
  std::string mandatory;
  extend->add_option("--center", center, "wheel center")->required();
  extend->add_option("--mandatory", mandatory, "boundary vertices every path system must reach");
  auto* linkage = app.add_subcommand("linkage", "two disjoint paths or a planar witness");
  std::string terminals;
  linkage->add_option("--terminals", terminals, "s1,s2,t1,t2")->required();
  auto* k5 = app.add_subcommand("k5", "K5-subdivision certificate");
  auto* color = app.add_subcommand("color", "proper 4-coloring");
  auto* obs = app.add_subcommand("obstructions", "catalog of boundary configurations without good wheels");
  int max_interior = 4;
  std::string degree = "flagged";
  obs->add_option("--max-interior", max_interior, "interior vertices")->check(CLI::Range(0, 5));
  obs->add_option("--degree", degree, "strict | flagged");
  auto* verify = app.add_subcommand("verify", "run a lemma-shaped check over a corpus");
  std::string lemma, catalog_path;
  int nmin = 1, nmax = 7, random_count = 0, random_order = 8;
  bool timing = false;
  verify->add_option("lemma", lemma, "L2LINK | L5CUTOBS | LEXT5 | THM1 | CONSEC")->required();
  verify->add_option("--nmin", nmin, "smallest order");
  verify->add_option("--nmax", nmax, "largest order");
  verify->add_option("--max-interior", max_interior, "L5CUTOBS interior bound")->check(CLI::Range(0, 5));
  verify->add_option("--degree", degree, "L5CUTOBS degree filter: strict | flagged");
  verify->add_option("--catalog", catalog_path, "L5CUTOBS catalog file");
  verify->add_option("--random", random_count, "add this many random graphs");
  verify->add_option("--random-order", random_order, "order of the random graphs");
  verify->add_flag("--timing", timing, "include elapsed time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*planarity) {
      return each(g, [](const Graph& graph, Json& j) {
        auto r = is_planar(graph);
        j["planar"] = r.planar;
        if (r.embedding) j["rotation"] = r.embedding->rotation;
        if (!r.note.empty()) j["note"] = r.note;
        return r.planar;
      });
    }
    if (*disc) {
      return each(g, [&](const Graph& graph, Json& j) {
        auto b = need_boundary(g, graph);
        auto r = is_disc_planar(graph, b, ordered);
        j["planar"] = r.planar;
        j["embedding"] = r.embedding ? to_json(*r.embedding) : Json(nullptr);
        if (!r.note.empty()) j["note"] = r.note;
        return r.planar;
      });
    }
    if (*seps) {
      return each(g, [&](const Graph& graph, Json& j) {
        Json list = Json::array();
        if (planar_side) {
          for (const auto& p : planar_side_separations(graph, k, min_side)) list.push_back(to_json(p.separation));
        } else {
          for (const auto& s : enumerate_k_separations(graph, k, min_side)) list.push_back(to_json(s));
        }
        j["separations"] = list;
        return true;
      });
    }
    if (*wheels) {
      return each(g, [&](const Graph& graph, Json& j) {
        auto b = need_boundary(g, graph);
        auto dp = is_disc_planar(graph, b, false);
        j["disc_planar"] = dp.planar;
        if (!dp.embedding) return false;
        VertexSet outer;
        for (Vertex v : faces(*dp.embedding)[dp.embedding->outer_face].walk) outer.insert(v);
        Json all = Json::array(), good = Json::array();
        for (Vertex v : graph.vertices() - outer) {
          auto verdict = wheel_at(*dp.embedding, v);
          if (verdict.defined()) {
            all.push_back(to_json(*verdict.wheel));
          } else {
            all.push_back({{"center", v}, {"violation", verdict.violation}});
          }
        }
        for (const auto& w : find_good_wheels(*dp.embedding, VertexSet::of(b))) good.push_back(to_json(w));
        j["wheels"] = all;
        j["good_wheels"] = good;
        return !good.empty();
      });
    }
    if (*extend) {
      return each(g, [&](const Graph& graph, Json& j) {
        auto b = need_boundary(g, graph);
        auto s = mandatory.empty() ? std::vector<Vertex>{} : parse_list(mandatory, "--mandatory");
        if (center < 0 || center >= graph.order()) throw UsageError("--center out of range");
        auto dp = is_disc_planar(graph, b, false);
        if (!dp.embedding) throw PreconditionError("no disc embedding with the boundary on one face");
        auto verdict = wheel_at(*dp.embedding, center);
        if (!verdict.defined()) throw PreconditionError("no wheel at " + std::to_string(center) + ": " + verdict.violation);
        auto r = is_extendable(*dp.embedding, *verdict.wheel, b, VertexSet::of(s));
        j["wheel"] = to_json(*verdict.wheel);
        j["extendable"] = r.extendable();
        if (r.paths) {
          j["paths"] = to_json(*r.paths);
        } else {
          j["cut"] = r.cut.to_vector();
          j["max_routable"] = r.max_routable;
          j["mandatory_shortfall"] = r.mandatory_shortfall;
        }
        return r.extendable();
      });
    }
    if (*linkage) {
      return each(g, [&](const Graph& graph, Json& j) {
        auto t = parse_list(terminals, "--terminals");
        if (t.size() != 4) throw UsageError("--terminals needs four vertices");
        for (Vertex v : t)
          if (v >= graph.order()) throw UsageError("--terminals vertex out of range");
        Terminals tt{t[0], t[1], t[2], t[3]};
        auto r = solve_two_linkage(graph, tt);
        j["terminals"] = t;
        j.update(to_json(r));
        return r.has_paths();
      });
    }
    if (*k5) {
      return each(g, [](const Graph& graph, Json& j) {
        auto cert = find_k5_subdivision(graph);
        j["found"] = cert.has_value();
        if (cert) j.update(to_json(*cert));
        return cert.has_value();
      });
    }
    if (*color) {
      return each(g, [](const Graph& graph, Json& j) {
        auto c = four_color(graph);
        j["colorable"] = c.has_value();
        if (c) j.update(to_json(*c));
        return c.has_value();
      });
    }
    if (*obs) {
      ObstructionOptions o;
      o.max_interior = max_interior;
      o.degree = parse_degree(degree);
      o.jobs = g.jobs;
      auto catalog = enumerate_obstructions(o);
      Json list = catalog_to_json(catalog);
      if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) throw UsageError("cannot write " + g.out);
        f << list.dump(1) << "\n";
        std::map<std::string, int> by_order;
        for (const auto& e : catalog) ++by_order[std::to_string(e.order())];
        emit(g, {{"entries", catalog.size()}, {"by_order", by_order}, {"catalog", g.out}});
      } else {
        emit(g, {{"entries", list}});
      }
      return 0;
    }
    if (*verify) {
      VerifyOptions o;
      o.nmin = nmin;
      o.nmax = nmax;
      o.jobs = g.jobs;
      o.seed = g.seed;
      o.max_interior = max_interior;
      o.obstruction.degree = parse_degree(degree);
      o.obstruction.jobs = g.jobs;
      if (!g.boundary.empty()) o.boundary = parse_list(g.boundary, "--boundary");
      if (!catalog_path.empty()) {
        std::ifstream f(catalog_path);
        if (!f) throw UsageError("cannot open " + catalog_path);
        o.catalog = catalog_from_json(Json::parse(f));
      }
      if (std::find(lemma_ids().begin(), lemma_ids().end(), lemma) == lemma_ids().end()) {
        throw UsageError("unknown lemma id " + lemma);
      }
      std::vector<Graph> corpus = g.input.empty() ? default_corpus(lemma, o) : load(g);
      if (random_count > 0) {
        if (random_order < 1 || random_order > 12) throw UsageError("--random-order must be in 1..12");
        std::mt19937_64 rng(g.seed);
        std::bernoulli_distribution coin(0.5);
        for (int i = 0; i < random_count; ++i) {
          Graph r(random_order);
          for (Vertex u = 0; u < random_order; ++u)
            for (Vertex v = u + 1; v < random_order; ++v)
              if (coin(rng)) r.add_edge(u, v);
          corpus.push_back(std::move(r));
        }
        o.nmax = std::max(o.nmax, random_order);
      }
      auto report = verify_lemma(lemma, corpus, o);
      for (const auto& c : report.counterexamples) persist(g, c.graph, {{"schema", kSchema}, {"lemma", lemma}, {"graph", to_json(c.graph)}, {"certificate", c.certificate}});
      emit(g, report.to_json(timing));
      std::cerr << lemma << ": " << (report.pass() ? "PASS" : "FAIL") << " (" << report.instances << " instances, "
                << report.elapsed_seconds << " s)\n";
      return report.pass() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
