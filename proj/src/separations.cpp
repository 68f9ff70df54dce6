#include "wheelforge/separations.hpp"

namespace wheelforge {

namespace {

bool edge_on_side(const Separation& sep, Side side, Vertex u, Vertex v) {
  VertexSet s = side == Side::first ? sep.side1 : sep.side2;
  if (!s.contains(u) || !s.contains(v)) return false;
  if (sep.cut.contains(u) && sep.cut.contains(v)) return sep.cut_edges_side == static_cast<int>(side);
  return true;
}

}  // namespace

std::vector<Edge> side_edges(const Graph& g, const Separation& sep, Side side) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if (edge_on_side(sep, side, u, v)) out.emplace_back(u, v);
  }
  return out;
}

Graph side_graph(const Graph& g, const Separation& sep, Side side, std::vector<int>* id_map) {
  VertexSet s = side == Side::first ? sep.side1 : sep.side2;
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v : s) map[v] = next++;
  Graph h(next);
  for (auto [u, v] : side_edges(g, sep, side)) h.add_edge(map[u], map[v]);
  if (id_map) *id_map = std::move(map);
  return h;
}

std::string check_separation(const Graph& g, const Separation& sep) {
  if ((sep.side1 | sep.side2) != g.vertices()) return "sides do not cover the host";
  if ((sep.side1 & sep.side2) != sep.cut) return "cut is not the intersection of the sides";
  for (auto [u, v] : g.edges()) {
    bool on1 = edge_on_side(sep, Side::first, u, v), on2 = edge_on_side(sep, Side::second, u, v);
    if (on1 == on2) {
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is on " + (on1 ? "both sides" : "no side");
    }
  }
  auto contained = [&](Side a) {
    VertexSet va = a == Side::first ? sep.side1 : sep.side2;
    VertexSet vb = a == Side::first ? sep.side2 : sep.side1;
    if (!va.subset_of(vb)) return false;
    return side_edges(g, sep, a).empty();
  };
  if (contained(Side::first)) return "side 1 is contained in side 2";
  if (contained(Side::second)) return "side 2 is contained in side 1";
  return {};
}

void for_each_k_separation(const Graph& g, int k, int min_side_order,
                           const std::function<bool(const Separation&)>& sink) {
  int n = g.order();
  if (k < 0 || k >= n) throw PreconditionError("k must satisfy 0 <= k < order");
  VertexSet all = g.vertices();
  // Gosper's hack over k-subsets.
  std::uint64_t c = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    VertexSet cut(c);
    auto comps = g.components(all - cut);
    std::size_t m = comps.size();
    if (m >= 2 && m < 64) {
      std::uint64_t groups = std::uint64_t{1} << (m - 1);
      for (std::uint64_t sel = 0; sel + 1 < groups; ++sel) {
        VertexSet g1 = comps[0], g2;
        for (std::size_t i = 1; i < m; ++i) {
          if ((sel >> (i - 1)) & 1U) {
            g1 |= comps[i];
          } else {
            g2 |= comps[i];
          }
        }
        int o1 = g1.size() + k, o2 = g2.size() + k;
        if (o1 < min_side_order && o2 < min_side_order) continue;
        if (!sink(Separation{cut, g1 | cut, g2 | cut, 1})) return;
      }
    }
    if (k == 0) break;
    std::uint64_t t = c | (c - 1);
    c = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(c) + 1));
    if (limit != 0 && c >= limit) break;
    if (c == 0) break;
  }
}

std::vector<Separation> enumerate_k_separations(const Graph& g, int k, int min_side_order) {
  std::vector<Separation> out;
  for_each_k_separation(g, k, min_side_order, [&](const Separation& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

void for_each_planar_side_separation(const Graph& g, int k, int min_side_order,
                                     const std::function<bool(const PlanarSide&)>& sink) {
  bool go = true;
  for_each_k_separation(g, k, min_side_order, [&](const Separation& sep) {
    for (const Separation& oriented : {sep, sep.swapped()}) {
      if (oriented.side1.size() < min_side_order) continue;
      std::vector<int> map;
      Graph side = side_graph(g, oriented, Side::first, &map);
      std::vector<Vertex> boundary;
      for (Vertex v : oriented.cut) boundary.push_back(map[v]);
      auto dp = is_disc_planar(side, boundary, false);
      if (!dp.planar) continue;
      if (!sink(PlanarSide{oriented, dp.embedding, map})) {
        go = false;
        return false;
      }
    }
    return go;
  });
}

std::vector<PlanarSide> planar_side_separations(const Graph& g, int k, int min_side_order) {
  std::vector<PlanarSide> out;
  for_each_planar_side_separation(g, k, min_side_order, [&](const PlanarSide& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

bool independent_cut(const Graph& g, const Separation& sep, Side side) {
  for (auto [u, v] : side_edges(g, sep, side)) {
    if (sep.cut.contains(u) && sep.cut.contains(v)) return false;
  }
  return true;
}

}  // namespace wheelforge
