#include "wheelforge/corpus.hpp"

#include <algorithm>
#include <unordered_set>

#include "wheelforge/canonical.hpp"
#include "wheelforge/paths.hpp"

namespace wheelforge {

std::uint64_t pack_upper(const Graph& g) {
  std::uint64_t bits = 0;
  int i = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v, ++i)
      if (g.adjacent(u, v)) bits |= std::uint64_t{1} << i;
  return bits;
}

namespace {

// Parent plus vertex n-1 joined to `nbrs`.
Graph extend(const Graph& parent, std::uint64_t nbrs) {
  int n = parent.order() + 1;
  Graph g(n);
  for (auto [u, v] : parent.edges()) g.add_edge(u, v);
  for (Vertex u : VertexSet(nbrs)) g.add_edge(u, n - 1);
  return g;
}

bool min_degree_vertex(const Graph& g, Vertex v) {
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) < g.degree(v)) return false;
  return true;
}

std::vector<Graph> finish(std::vector<Graph> out) {
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return emit_graph6(a) < emit_graph6(b); });
  return out;
}

// Three-vertex cuts of a 3-connected parent with their component masks.
struct ThreeCut {
  std::vector<std::uint64_t> components;
};

std::vector<ThreeCut> three_cuts(const Graph& p) {
  std::vector<ThreeCut> out;
  int n = p.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        auto comps = p.components(p.vertices() - VertexSet{a, b, c});
        if (comps.size() < 2) continue;
        ThreeCut cut;
        for (VertexSet s : comps) cut.components.push_back(s.bits());
        out.push_back(std::move(cut));
      }
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw PreconditionError("order must be nonnegative");
  if (n > 11) throw UnsupportedSize("corpus generation is limited to order 11");
  if (n == 0) return {Graph(0)};
  std::unordered_set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const Graph& p : all_graphs(n - 1)) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      Graph g = extend(p, m);
      if (!min_degree_vertex(g, n - 1)) continue;
      Graph c = canonical_labeling(g).graph;
      if (seen.insert(pack_upper(c)).second) out.push_back(std::move(c));
    }
  }
  return finish(std::move(out));
}

std::vector<Graph> k_connected_graphs(int n, int k) {
  if (k < 0) throw PreconditionError("k must be nonnegative");
  if (n > 11) throw UnsupportedSize("corpus generation is limited to order 11");
  if (k == 0) return all_graphs(n);
  if (n <= k) return {};
  std::vector<Graph> parents = k == 1 ? all_graphs(n - 1) : k_connected_graphs(n - 1, k - 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const Graph& p : parents) {
    std::vector<ThreeCut> cuts;
    if (k == 4) cuts = three_cuts(p);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      if (std::popcount(m) < k) continue;
      Graph g = extend(p, m);
      if (!min_degree_vertex(g, n - 1)) continue;
      bool ok;
      if (k == 4) {
        // p is 3-connected; only its 3-cuts can survive the new vertex, and
        // they do unless the vertex touches every side.
        ok = std::all_of(cuts.begin(), cuts.end(), [&](const ThreeCut& c) {
          return std::all_of(c.components.begin(), c.components.end(),
                             [&](std::uint64_t s) { return (s & m) != 0; });
        });
      } else {
        ok = is_k_connected(g, k);
      }
      if (!ok) continue;
      Graph c = canonical_labeling(g).graph;
      if (seen.insert(pack_upper(c)).second) out.push_back(std::move(c));
    }
  }
  return finish(std::move(out));
}

}  // namespace wheelforge
