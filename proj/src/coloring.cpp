#include "wheelforge/coloring.hpp"

#include <bit>

namespace wheelforge {

namespace {

class Dsatur {
 public:
  explicit Dsatur(const Graph& g) : g_(g), color_(static_cast<std::size_t>(g.order()), kUncolored) {}

  std::optional<Coloring> run() {
    if (solve(0, -1)) return color_;
    return std::nullopt;
  }

 private:
  unsigned forbidden(Vertex v) const {
    unsigned mask = 0;
    for (Vertex u : g_.neighbors(v))
      if (color_[u] != kUncolored) mask |= 1U << color_[u];
    return mask;
  }

  bool solve(int colored, int top) {
    int n = g_.order();
    if (colored == n) return true;
    Vertex pick = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] != kUncolored) continue;
      int sat = std::popcount(forbidden(v));
      int deg = 0;
      for (Vertex u : g_.neighbors(v))
        if (color_[u] == kUncolored) ++deg;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat >= 4) return false;
    unsigned bad = forbidden(pick);
    // Colors above top+1 are interchangeable with top+1.
    for (int c = 0; c < 4 && c <= top + 1; ++c) {
      if (bad & (1U << c)) continue;
      color_[pick] = c;
      if (solve(colored + 1, std::max(top, c))) return true;
    }
    color_[pick] = kUncolored;
    return false;
  }

  const Graph& g_;
  Coloring color_;
};

}  // namespace

std::optional<Coloring> four_color(const Graph& g) {
  if (g.order() > 20) throw UnsupportedSize("exact 4-coloring is limited to order 20");
  return Dsatur(g).run();
}

GreedyResult greedy_extend(const Graph& g, const Coloring& partial, const std::vector<Vertex>& order) {
  int n = g.order();
  if (static_cast<int>(partial.size()) != n) throw DomainError("coloring size does not match the graph");
  VertexSet uncolored, listed;
  for (Vertex v = 0; v < n; ++v) {
    if (partial[v] == kUncolored) {
      uncolored.insert(v);
    } else if (partial[v] < 0 || partial[v] > 3) {
      throw DomainError("color of vertex " + std::to_string(v) + " outside 0..3");
    }
  }
  for (Vertex v : order) {
    if (v < 0 || v >= n || !uncolored.contains(v)) {
      throw DomainError("order lists vertex " + std::to_string(v) + " which is not uncolored");
    }
    if (listed.contains(v)) throw DomainError("order repeats vertex " + std::to_string(v));
    listed.insert(v);
  }
  if (listed != uncolored) throw DomainError("order omits an uncolored vertex");

  Coloring c = partial;
  GreedyResult r;
  for (Vertex v : order) {
    unsigned taken = 0;
    for (Vertex u : g.neighbors(v))
      if (c[u] != kUncolored) taken |= 1U << c[u];
    if ((taken & 0xFU) == 0xFU) {
      r.stuck = v;
      return r;
    }
    c[v] = std::countr_one(taken);
  }
  r.coloring = std::move(c);
  return r;
}

std::string verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) return "coloring size does not match the graph";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] < 0 || c[v] > 3) return "vertex " + std::to_string(v) + " is not colored";
  }
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic";
  }
  return {};
}

}  // namespace wheelforge
