#include "wheelforge/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wheelforge {

namespace {

constexpr int kMax = Graph::kMaxOrder;

// Ordered partition of the vertices: lab holds vertices by position, and
// start[i] marks the first position of each cell.
struct Partition {
  std::array<int, kMax> lab{};
  std::array<bool, kMax + 1> start{};
  int n = 0;

  int cell_end(int p) const {
    int q = p + 1;
    while (q < n && !start[q]) ++q;
    return q;
  }
  bool discrete() const {
    for (int i = 0; i < n; ++i)
      if (!start[i]) return false;
    return true;
  }
};

class Canonizer {
 public:
  Canonizer(const Graph& g, VertexSet distinguished) : g_(g), n_(g.order()) {
    root_.n = n_;
    int pos = 0;
    for (Vertex v : distinguished) root_.lab[pos++] = v;
    int split = pos;
    for (Vertex v : g.vertices() - distinguished) root_.lab[pos++] = v;
    for (int i = 0; i <= n_; ++i) root_.start[i] = false;
    if (n_ > 0) root_.start[0] = true;
    if (split > 0 && split < n_) root_.start[split] = true;
    root_.start[n_] = true;
    parent_.resize(static_cast<std::size_t>(n_));
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Partition p = root_;
    std::uint64_t active = 0;
    for (int i = 0; i < n_; ++i)
      if (p.start[i]) active |= std::uint64_t{1} << i;
    refine(p, active);
    std::array<int, kMax> fixed{};
    search(p, fixed, 0);
    return std::vector<Vertex>(best_lab_.begin(), best_lab_.begin() + n_);
  }

 private:
  void refine(Partition& p, std::uint64_t active) {
    std::array<int, kMax> count{};
    while (active) {
      int ws = std::countr_zero(active);
      active &= active - 1;
      int we = p.cell_end(ws);
      std::uint64_t wmask = 0;
      for (int i = ws; i < we; ++i) wmask |= std::uint64_t{1} << p.lab[i];

      for (int xs = 0; xs < n_;) {
        int xe = p.cell_end(xs);
        if (xe - xs > 1) {
          bool differ = false;
          for (int i = xs; i < xe; ++i) {
            count[p.lab[i]] = std::popcount(g_.row(p.lab[i]) & wmask);
            if (count[p.lab[i]] != count[p.lab[xs]]) differ = true;
          }
          if (differ) {
            std::stable_sort(p.lab.begin() + xs, p.lab.begin() + xe,
                             [&](int a, int b) { return count[a] < count[b]; });
            for (int i = xs + 1; i < xe; ++i) {
              if (count[p.lab[i]] != count[p.lab[i - 1]]) p.start[i] = true;
            }
            for (int i = xs; i < xe; ++i)
              if (p.start[i]) active |= std::uint64_t{1} << i;
          }
        }
        xs = xe;
      }
    }
  }

  // Adjacency rows of g relabeled by lab (row i = bitmask of positions).
  void leaf_rows(const Partition& p, std::array<std::uint64_t, kMax>& rows) const {
    std::array<int, kMax> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (Vertex u : g_.neighbors(p.lab[i])) r |= std::uint64_t{1} << pos[u];
      rows[i] = r;
    }
  }

  int compare_rows(const std::array<std::uint64_t, kMax>& a,
                   const std::array<std::uint64_t, kMax>& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // Orbits of the group generated by stored automorphisms that fix the first
  // `depth` individualized vertices.
  void orbits(const std::array<int, kMax>& fixed, int depth) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[fixed[d]] == fixed[d];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  void search(const Partition& p, std::array<int, kMax>& fixed, int depth) {
    if (p.discrete()) {
      std::array<std::uint64_t, kMax> rows{};
      leaf_rows(p, rows);
      if (!have_best_) {
        have_best_ = true;
        best_rows_ = rows;
        best_lab_ = p.lab;
        return;
      }
      int c = compare_rows(rows, best_rows_);
      if (c == 0) {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = p.lab[i];
        autos_.push_back(std::move(gamma));
      } else if (c > 0) {
        best_rows_ = rows;
        best_lab_ = p.lab;
      }
      return;
    }
    int ts = 0;
    while (p.cell_end(ts) - ts == 1) ts = p.cell_end(ts);
    int te = p.cell_end(ts);
    std::array<int, kMax> cell{};
    int csize = te - ts;
    for (int i = 0; i < csize; ++i) cell[i] = p.lab[ts + i];
    std::sort(cell.begin(), cell.begin() + csize);

    std::uint64_t tried = 0;
    for (int ci = 0; ci < csize; ++ci) {
      int v = cell[ci];
      if (tried) {
        orbits(fixed, depth);
        bool same = false;
        for (Vertex u : VertexSet(tried)) {
          if (find(u) == find(v)) {
            same = true;
            break;
          }
        }
        if (same) continue;
      }
      tried |= std::uint64_t{1} << v;
      Partition child = p;
      int at = ts;
      while (child.lab[at] != v) ++at;
      std::swap(child.lab[at], child.lab[ts]);
      child.start[ts + 1] = true;
      fixed[depth] = v;
      refine(child, std::uint64_t{1} << ts);
      search(child, fixed, depth + 1);
    }
  }

  const Graph& g_;
  int n_;
  Partition root_;
  bool have_best_ = false;
  std::array<std::uint64_t, kMax> best_rows_{};
  std::array<int, kMax> best_lab_{};
  std::vector<std::vector<int>> autos_;
  std::vector<int> parent_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, VertexSet distinguished) {
  distinguished &= g.vertices();
  CanonicalLabeling out;
  out.order = Canonizer(g, distinguished).run();
  out.distinguished = distinguished.size();
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) pos[out.order[i]] = i;
  out.graph = Graph(g.order());
  for (auto [u, v] : g.edges()) out.graph.add_edge(pos[u], pos[v]);
  return out;
}

std::string canonical_key(const Graph& g, VertexSet distinguished) {
  auto lab = canonical_labeling(g, distinguished);
  std::string key = emit_graph6(lab.graph);
  if (lab.distinguished > 0) key += "|" + std::to_string(lab.distinguished);
  return key;
}

std::string canonical_form(const Graph& g, const std::optional<std::vector<Vertex>>& boundary) {
  if (g.order() > 12) {
    throw UnsupportedSize("canonical_form supports order <= 12, got " + std::to_string(g.order()));
  }
  VertexSet b;
  if (boundary) {
    for (Vertex v : *boundary) {
      if (v < 0 || v >= g.order()) throw DomainError("boundary vertex out of range");
      b.insert(v);
    }
  }
  return canonical_key(g, b);
}

}  // namespace wheelforge
