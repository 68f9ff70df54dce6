#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wheelforge/error.hpp"

namespace wheelforge {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Set of vertex ids of a graph with at most 64 vertices, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <typename Range>
  static VertexSet of(const Range& r) {
    VertexSet s;
    for (Vertex v : r) s.insert(v);
    return s;
  }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t b) : b_(b) {}
    Vertex operator*() const { return std::countr_zero(b_); }
    iterator& operator++() { b_ &= b_ - 1; return *this; }
    iterator operator++(int) { iterator t = *this; ++*this; return t; }
    bool operator==(const iterator& o) const { return b_ == o.b_; }

   private:
    std::uint64_t b_ = 0;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Undirected simple graph on vertices 0..order-1 (order <= 64).
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  std::uint64_t row(Vertex v) const { return adj_[v]; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `keep`; vertex ids are re-densified in ascending order.
  // id_map[old] = new id or -1.
  Graph induced(VertexSet keep, std::vector<int>* id_map = nullptr) const;

  // Vertices reachable from `from` using only vertices in `within`.
  VertexSet reach(VertexSet from, VertexSet within) const;
  // Connected components of the subgraph induced by `within`, ordered by
  // smallest member.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(vertices()); }
  bool is_connected() const;

  bool is_independent(VertexSet s) const;

  bool operator==(const Graph&) const = default;

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph wheel(int rim);
  static Graph grid(int rows, int cols);
  static Graph petersen();
  static Graph octahedron();
  static Graph icosahedron();

 private:
  std::vector<std::uint64_t> adj_;
};

// Vertex sequences; consecutive vertices are edges of the host graph.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;

  bool operator==(const PathSystem&) const = default;
};

// Checks every path is a simple walk in `g` and that two paths share a vertex
// only if it is in `shared` and is an endpoint of both. Returns an empty
// string on success, otherwise a description of the first violation.
std::string check_path_system(const Graph& g, const PathSystem& ps, VertexSet shared = {});

// graph6 (single-byte size form handled for order <= 62; longer size forms are
// accepted on input up to the 64-vertex limit).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

struct EditResult {
  Graph graph;
  std::vector<int> id_map;  // old id -> new id, -1 when deleted
};

// Deletes `deletions` (re-densifying ids) then inserts `additions`, whose
// endpoints are given as original ids.
EditResult apply_edit(const Graph& g, VertexSet deletions, const std::vector<Edge>& additions);

}  // namespace wheelforge
