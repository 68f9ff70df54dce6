#include "wheelforge/graph.hpp"

#include <algorithm>
#include <set>

namespace wheelforge {

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw UnsupportedSize("graph order " + std::to_string(order) + " outside [0, 64]");
  }
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, const std::vector<Edge>& edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (auto r : adj_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw DomainError("self-loop at " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(VertexSet keep, std::vector<int>* id_map) const {
  std::vector<int> map(adj_.size(), -1);
  int next = 0;
  for (Vertex v : keep & vertices()) map[v] = next++;
  Graph h(next);
  for (Vertex v : keep & vertices()) {
    for (Vertex u : VertexSet(adj_[v]) & keep) {
      if (u > v) h.add_edge(map[v], map[u]);
    }
  }
  if (id_map) *id_map = std::move(map);
  return h;
}

VertexSet Graph::reach(VertexSet from, VertexSet within) const {
  std::uint64_t seen = from.bits() & within.bits();
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet(frontier)) next |= adj_[v];
    next &= within.bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet left = within & vertices();
  while (!left.empty()) {
    VertexSet c = reach(VertexSet::single(left.first()), left);
    out.push_back(c);
    left -= c;
  }
  return out;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  return reach(VertexSet::single(0), vertices()) == vertices();
}

bool Graph::is_independent(VertexSet s) const {
  for (Vertex v : s) {
    if (VertexSet(adj_[v]).intersects(s)) return false;
  }
  return true;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

// Center is vertex 0; rim is 1..rim in cyclic order.
Graph Graph::wheel(int rim) {
  Graph g(rim + 1);
  for (int i = 1; i <= rim; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % rim + 1);
  }
  return g;
}

Graph Graph::grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph Graph::octahedron() {
  Graph g = complete(6);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  return g;
}

Graph Graph::icosahedron() {
  // Two poles 0 and 11, upper ring 1..5, lower ring 6..10.
  Graph g(12);
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i, up_next = 1 + (i + 1) % 5;
    int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    g.add_edge(0, up);
    g.add_edge(11, lo);
    g.add_edge(up, up_next);
    g.add_edge(lo, lo_next);
    g.add_edge(up, lo);
    g.add_edge(up_next, lo);
  }
  return g;
}

std::string check_path_system(const Graph& g, const PathSystem& ps, VertexSet shared) {
  const auto& paths = ps.paths;
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (p.empty()) return "path " + std::to_string(i) + " is empty";
    VertexSet seen;
    for (std::size_t j = 0; j < p.size(); ++j) {
      Vertex v = p[j];
      if (v < 0 || v >= g.order()) return "path " + std::to_string(i) + " has out-of-range vertex";
      if (seen.contains(v)) {
        return "path " + std::to_string(i) + " repeats vertex " + std::to_string(v);
      }
      seen.insert(v);
      if (j > 0 && !g.adjacent(p[j - 1], v)) {
        return "path " + std::to_string(i) + " uses non-edge " + std::to_string(p[j - 1]) + "-" +
               std::to_string(v);
      }
    }
    sets.push_back(seen);
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      for (Vertex v : sets[i] & sets[j]) {
        bool end_i = paths[i].front() == v || paths[i].back() == v;
        bool end_j = paths[j].front() == v || paths[j].back() == v;
        if (!shared.contains(v) || !end_i || !end_j) {
          return "paths " + std::to_string(i) + " and " + std::to_string(j) + " share vertex " +
                 std::to_string(v);
        }
      }
    }
  }
  return {};
}

namespace {

constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 record truncated", i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
    return c - kBias;
  };

  long long n = byte_at(pos);
  ++pos;
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') {
      throw UnsupportedSize("graph6 eight-byte size form exceeds 64 vertices");
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
  }
  if (n > Graph::kMaxOrder) throw UnsupportedSize("graph6 order " + std::to_string(n) + " exceeds 64");

  Graph g(static_cast<int>(n));
  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need) throw ParseError("graph6 record truncated", text.size());
  if (text.size() - pos > need) throw ParseError("graph6 record has trailing bytes", pos + need);

  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int b = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    int last = byte_at(pos + need - 1);
    int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6 nonzero padding", pos + need - 1);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw UnsupportedSize("emit_graph6 supports order <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

EditResult apply_edit(const Graph& g, VertexSet deletions, const std::vector<Edge>& additions) {
  EditResult r;
  r.graph = g.induced(g.vertices() - deletions, &r.id_map);
  for (auto [u, v] : additions) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
      throw InvalidEdit("addition references unknown vertex");
    }
    if (deletions.contains(u) || deletions.contains(v)) {
      throw InvalidEdit("addition (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a deleted vertex");
    }
    if (u == v) throw InvalidEdit("addition is a self-loop");
    Vertex a = r.id_map[u], b = r.id_map[v];
    if (r.graph.adjacent(a, b)) {
      throw InvalidEdit("addition (" + std::to_string(u) + "," + std::to_string(v) +
                        ") duplicates an existing edge");
    }
    r.graph.add_edge(a, b);
  }
  return r;
}

}  // namespace wheelforge
