#include "wheelforge/obstructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "wheelforge/canonical.hpp"
#include "wheelforge/embedding.hpp"
#include "wheelforge/paths.hpp"
#include "wheelforge/wheels.hpp"

namespace wheelforge {

namespace {

// k paths from v to t sharing only v.
bool fan(const Graph& g, Vertex v, VertexSet t, int k) {
  VertexSet nbrs = g.neighbors(v);
  if (nbrs.size() < k) return false;
  VertexSet live = g.vertices() - VertexSet::single(v);
  return disjoint_paths(g, nbrs, t, k, {}, live).routed();
}

std::vector<Vertex> boundary_ids() { return {0, 1, 2, 3, 4}; }

}  // namespace

bool passes_local_filters(const Graph& g, const std::vector<Vertex>& boundary, const ObstructionOptions& opt) {
  VertexSet t = VertexSet::of(boundary);
  int b = static_cast<int>(boundary.size());
  if (b < 4 || b > kObstructionBoundary || t.size() != b) return false;
  if (g.order() <= b) return false;
  if (!g.is_independent(t)) return false;
  // Every boundary vertex attaches to the interior and the whole
  // configuration is one piece, so the boundary lies on a single face walk.
  for (Vertex b : t)
    if (g.degree(b) == 0) return false;
  if (g.components().size() != 1) return false;
  for (Vertex v : g.vertices() - t) {
    int d = g.degree(v);
    if (d < 3) return false;
    if (d == 3) {
      // Boundary-facing deficiency: the vertex touches the boundary.
      if (opt.degree == DegreeFilter::strict || !g.neighbors(v).intersects(t)) return false;
    }
    if (opt.require_fans && !fan(g, v, t, std::min(d, 4))) return false;
  }
  return is_disc_planar(g, boundary, false).planar;
}

bool has_good_wheel(const Graph& g, const std::vector<Vertex>& boundary) {
  auto dp = is_disc_planar(g, boundary, false);
  if (!dp.embedding) return false;
  return !find_good_wheels(*dp.embedding, VertexSet::of(boundary)).empty();
}

std::vector<ObstructionEntry> enumerate_obstructions(const ObstructionOptions& opt) {
  if (opt.max_interior < 0 || opt.max_interior > 5) throw UnsupportedSize("max_interior must be in 0..5");
  VertexSet t = VertexSet::range(kObstructionBoundary);
  std::vector<Vertex> tb = boundary_ids();

  std::map<std::string, ObstructionEntry> found;
  std::vector<Graph> level{Graph(kObstructionBoundary)};
  for (int m = 1; m <= opt.max_interior; ++m) {
    int n = kObstructionBoundary + m;
    std::map<std::string, Graph> next;
    std::mutex lock;
    auto work = [&](std::size_t begin, std::size_t end) {
      std::map<std::string, Graph> local;
      std::set<std::string> rejected;
      for (std::size_t i = begin; i < end; ++i) {
        const Graph& p = level[i];
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
          Graph g(n);
          for (auto [u, v] : p.edges()) g.add_edge(u, v);
          for (Vertex u : VertexSet(nbrs)) g.add_edge(u, n - 1);
          // The canonical order puts the boundary cell first, so the
          // relabeled graph keeps the boundary at 0..4.
          auto lab = canonical_labeling(g, t);
          std::string key = emit_graph6(lab.graph) + "|" + std::to_string(kObstructionBoundary);
          if (local.count(key) || rejected.count(key)) continue;
          if (!is_disc_planar(lab.graph, tb, false).planar) {
            rejected.insert(std::move(key));
            continue;
          }
          local.emplace(std::move(key), lab.graph);
        }
      }
      std::lock_guard<std::mutex> guard(lock);
      next.merge(local);
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    std::size_t chunk = (level.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::size_t b = j * chunk, e = std::min(level.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();

    level.clear();
    for (auto& [key, g] : next) {
      level.push_back(g);
      if (!passes_local_filters(g, tb, opt)) continue;
      auto dp = is_disc_planar(g, tb, false);
      if (!dp.embedding) continue;
      if (!find_good_wheels(*dp.embedding, t).empty()) continue;
      ObstructionEntry e;
      e.configuration = g;
      e.boundary = dp.embedding->boundary;
      e.interior_order = m;
      e.canonical = key;
      for (Vertex v : g.vertices() - t)
        if (g.degree(v) == 3) e.deficient.push_back(v);
      found.emplace(key, std::move(e));
    }
  }

  std::vector<ObstructionEntry> out;
  for (auto& [key, e] : found) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  std::map<int, int> counter;
  for (auto& e : out) e.id = "O" + std::to_string(e.order()) + "." + std::to_string(counter[e.order()]++);
  return out;
}

std::optional<std::string> match_obstruction(const std::vector<ObstructionEntry>& catalog, const Graph& g,
                                             const std::vector<Vertex>& boundary) {
  if (boundary.size() != static_cast<std::size_t>(kObstructionBoundary)) {
    throw PreconditionError("obstruction boundary must have five vertices");
  }
  std::string key = canonical_key(g, VertexSet::of(boundary));
  for (const auto& e : catalog)
    if (e.canonical == key) return e.id;
  return std::nullopt;
}

}  // namespace wheelforge
