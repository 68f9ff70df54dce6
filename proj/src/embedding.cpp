#include "wheelforge/embedding.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wheelforge {

bool Face::contains(Vertex v) const { return std::find(walk.begin(), walk.end(), v) != walk.end(); }

bool Face::has_dart(Vertex u, Vertex v) const {
  if (walk.size() < 2) return false;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] == u && walk[(i + 1) % walk.size()] == v) return true;
  }
  return false;
}

namespace {

// Blocks (maximal 2-connected subgraphs and bridges) as vertex masks.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(disc_) {}

  std::vector<VertexSet> run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (disc_[v] < 0 && g_.degree(v) > 0) dfs(v, -1);
    }
    return blocks_;
  }

 private:
  void dfs(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = time_++;
    for (Vertex u : g_.neighbors(v)) {
      if (u == parent) continue;
      if (disc_[u] < 0) {
        stack_.emplace_back(v, u);
        dfs(u, v);
        low_[v] = std::min(low_[v], low_[u]);
        if (low_[u] >= disc_[v]) {
          VertexSet block;
          while (true) {
            auto [a, b] = stack_.back();
            stack_.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == u) break;
          }
          blocks_.push_back(block);
        }
      } else if (disc_[u] < disc_[v]) {
        stack_.emplace_back(v, u);
        low_[v] = std::min(low_[v], disc_[u]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_, low_;
  std::vector<Edge> stack_;
  std::vector<VertexSet> blocks_;
  int time_ = 0;
};

std::uint64_t mask_of(const std::vector<Vertex>& walk) {
  std::uint64_t m = 0;
  for (Vertex v : walk) m |= std::uint64_t{1} << v;
  return m;
}

// Demoucron-Malgrange-Pertuiset on one 2-connected block with >= 3 vertices.
// On success fills rot[v] for block vertices with the block-local order.
bool embed_block(const Graph& g, VertexSet block, Rotation& rot, std::string& note) {
  auto badj = [&](Vertex v) { return g.neighbors(v) & block; };
  int bv = block.size(), be = 0;
  for (Vertex v : block) be += badj(v).size();
  be /= 2;
  if (bv >= 3 && be > 3 * bv - 6) {
    note = "block with " + std::to_string(bv) + " vertices has " + std::to_string(be) +
           " edges, exceeding 3n-6";
    return false;
  }

  // Initial cycle through the smallest vertex and its smallest neighbor.
  Vertex r = block.first();
  Vertex x = badj(r).first();
  std::vector<int> prev(static_cast<std::size_t>(g.order()), -1);
  {
    std::vector<Vertex> queue{x};
    VertexSet seen{x};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex a = queue[qi];
      for (Vertex b : badj(a) - seen) {
        if (a == x && b == r) continue;
        seen.insert(b);
        prev[b] = a;
        queue.push_back(b);
      }
    }
  }
  std::vector<Vertex> cycle;
  for (Vertex v = r; v != -1; v = prev[v]) cycle.push_back(v);
  // cycle = r, ..., x; close via edge x-r.
  std::vector<std::vector<Vertex>> fcs;
  std::vector<std::uint64_t> fmask;
  fcs.push_back(cycle);
  fcs.push_back(std::vector<Vertex>(cycle.rbegin(), cycle.rend()));
  fmask.push_back(mask_of(cycle));
  fmask.push_back(mask_of(cycle));

  VertexSet emb = VertexSet::of(cycle);
  std::vector<std::uint64_t> eadj(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    eadj[a] |= std::uint64_t{1} << b;
    eadj[b] |= std::uint64_t{1} << a;
  }
  int embedded_edges = static_cast<int>(cycle.size());

  struct Fragment {
    std::uint64_t attach;
    VertexSet interior;  // empty for a single edge
    Vertex a, b;         // edge endpoints when interior empty
  };

  while (embedded_edges < be) {
    std::vector<Fragment> frags;
    for (Vertex u : emb) {
      for (Vertex v : (badj(u) & emb) - VertexSet(eadj[u])) {
        if (v > u) frags.push_back({(std::uint64_t{1} << u) | (std::uint64_t{1} << v), {}, u, v});
      }
    }
    for (VertexSet c : g.components(block - emb)) {
      std::uint64_t att = 0;
      for (Vertex v : c) att |= (badj(v) & emb).bits();
      frags.push_back({att, c, -1, -1});
    }

    int best = -1, best_count = 1 << 30, best_face = -1;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      int count = 0, first = -1;
      for (std::size_t f = 0; f < fcs.size(); ++f) {
        if ((frags[i].attach & ~fmask[f]) == 0) {
          if (first < 0) first = static_cast<int>(f);
          ++count;
        }
      }
      if (count < best_count) {
        best_count = count;
        best = static_cast<int>(i);
        best_face = first;
      }
      if (count == 0) break;
    }
    if (best_count == 0) {
      note = "fragment with attachments " + std::to_string(VertexSet(frags[best].attach).size()) +
             " fits no face";
      return false;
    }

    const Fragment& fr = frags[best];
    std::vector<Vertex> path;
    if (fr.interior.empty()) {
      path = {fr.a, fr.b};
    } else {
      VertexSet att(fr.attach);
      Vertex a = att.first();
      Vertex b = (att - VertexSet{a}).first();
      // BFS inside the fragment from a's neighbors to a neighbor of b.
      std::vector<int> from(static_cast<std::size_t>(g.order()), -1);
      std::vector<Vertex> queue;
      VertexSet seen;
      for (Vertex c : badj(a) & fr.interior) {
        seen.insert(c);
        from[c] = a;
        queue.push_back(c);
      }
      Vertex end = -1;
      for (std::size_t qi = 0; qi < queue.size() && end < 0; ++qi) {
        Vertex c = queue[qi];
        if (g.adjacent(c, b)) {
          end = c;
          break;
        }
        for (Vertex d : (badj(c) & fr.interior) - seen) {
          seen.insert(d);
          from[d] = c;
          queue.push_back(d);
        }
      }
      path.push_back(b);
      for (Vertex c = end; c != a; c = from[c]) path.push_back(c);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    // Split the chosen face along the path a = path.front() .. b = path.back().
    const std::vector<Vertex> f = fcs[best_face];
    Vertex a = path.front(), b = path.back();
    std::size_t ia = std::find(f.begin(), f.end(), a) - f.begin();
    std::size_t ib = std::find(f.begin(), f.end(), b) - f.begin();
    std::vector<Vertex> f1, f2;
    for (std::size_t i = ia;; i = (i + 1) % f.size()) {
      f1.push_back(f[i]);
      if (i == ib) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    for (std::size_t i = ib;; i = (i + 1) % f.size()) {
      f2.push_back(f[i]);
      if (i == ia) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    fcs[best_face] = f1;
    fmask[best_face] = mask_of(f1);
    fcs.push_back(f2);
    fmask.push_back(mask_of(f2));

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      eadj[path[i]] |= std::uint64_t{1} << path[i + 1];
      eadj[path[i + 1]] |= std::uint64_t{1} << path[i];
      emb.insert(path[i]);
      emb.insert(path[i + 1]);
      ++embedded_edges;
    }
  }

  // succ[v][u] = w for consecutive u, v, w on a face.
  std::vector<std::array<int, Graph::kMaxOrder>> succ(static_cast<std::size_t>(g.order()));
  for (const auto& f : fcs) {
    std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      succ[f[(i + 1) % m]][f[i]] = f[(i + 2) % m];
    }
  }
  for (Vertex v : block) {
    VertexSet nb = badj(v);
    std::vector<Vertex> order;
    Vertex start = nb.first(), u = start;
    do {
      order.push_back(u);
      u = succ[v][u];
    } while (u != start && static_cast<int>(order.size()) <= nb.size());
    if (static_cast<int>(order.size()) != nb.size()) {
      note = "internal: face split produced an inconsistent rotation";
      return false;
    }
    rot[v].insert(rot[v].end(), order.begin(), order.end());
  }
  return true;
}

// Index of the dart (u, v) in a dense table.
struct DartIndex {
  explicit DartIndex(int n) : n(n), pos(static_cast<std::size_t>(n) * n, -1) {}
  int n;
  std::vector<int> pos;  // position of v in rotation[u]
  int& at(Vertex u, Vertex v) { return pos[static_cast<std::size_t>(u) * n + v]; }
};

void check_rotation(const Graph& host, const Rotation& rotation) {
  if (static_cast<int>(rotation.size()) != host.order()) {
    throw InconsistentEmbedding("rotation has " + std::to_string(rotation.size()) +
                                " entries for " + std::to_string(host.order()) + " vertices");
  }
  for (Vertex v = 0; v < host.order(); ++v) {
    VertexSet seen;
    for (Vertex u : rotation[v]) {
      if (u < 0 || u >= host.order() || !host.adjacent(u, v) || seen.contains(u)) {
        throw InconsistentEmbedding("rotation at " + std::to_string(v) + " does not permute its neighbors");
      }
      seen.insert(u);
    }
    if (seen != host.neighbors(v)) {
      throw InconsistentEmbedding("rotation at " + std::to_string(v) + " misses a neighbor");
    }
  }
}

}  // namespace

std::vector<Face> faces(const Graph& host, const Rotation& rotation) {
  check_rotation(host, rotation);
  int n = host.order();
  DartIndex idx(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) idx.at(v, rotation[v][i]) = static_cast<int>(i);
  }
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  std::vector<Face> out;
  for (Vertex u = 0; u < n; ++u) {
    if (rotation[u].empty()) {
      out.push_back(Face{{u}});
      continue;
    }
    for (Vertex v : rotation[u]) {
      if (used[static_cast<std::size_t>(u) * n + v]) continue;
      Face f;
      Vertex a = u, b = v;
      while (!used[static_cast<std::size_t>(a) * n + b]) {
        used[static_cast<std::size_t>(a) * n + b] = 1;
        f.walk.push_back(a);
        const auto& rb = rotation[b];
        Vertex c = rb[(idx.at(b, a) + 1) % rb.size()];
        a = b;
        b = c;
      }
      if (a != u || b != v) throw InconsistentEmbedding("face trace did not close");
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Face> faces(const DiscEmbedding& e) { return faces(e.host, e.rotation); }

void validate_embedding(const Graph& host, const Rotation& rotation) {
  auto fs = faces(host, rotation);
  for (VertexSet comp : host.components()) {
    int v = comp.size(), e = 0, f = 0;
    for (Vertex x : comp) e += host.degree(x);
    e /= 2;
    for (const auto& face : fs) {
      if (comp.contains(face.walk.front())) ++f;
    }
    if (v - e + f != 2) {
      throw InconsistentEmbedding("component at " + std::to_string(comp.first()) +
                                  " has Euler characteristic " + std::to_string(v - e + f));
    }
  }
}

bool walk_has_cyclic_order(const std::vector<Vertex>& walk, const std::vector<Vertex>& order) {
  if (order.empty()) return true;
  std::size_t m = walk.size();
  for (std::size_t s = 0; s < m; ++s) {
    if (walk[s] != order[0]) continue;
    std::size_t k = 1;
    for (std::size_t i = 1; i < m && k < order.size(); ++i) {
      if (walk[(s + i) % m] == order[k]) ++k;
    }
    if (k == order.size()) return true;
  }
  return false;
}

void validate_disc_embedding(const DiscEmbedding& e) {
  validate_embedding(e.host, e.rotation);
  auto fs = faces(e);
  if (e.outer_face < 0 || e.outer_face >= static_cast<int>(fs.size())) {
    throw InconsistentEmbedding("outer face id out of range");
  }
  const auto& walk = fs[e.outer_face].walk;
  for (Vertex v : e.boundary) {
    if (std::find(walk.begin(), walk.end(), v) == walk.end()) {
      throw InconsistentEmbedding("boundary vertex " + std::to_string(v) + " is not on the outer face");
    }
  }
  if (!walk_has_cyclic_order(walk, e.boundary)) {
    throw InconsistentEmbedding("outer walk does not carry the boundary in stored order");
  }
}

Rotation mirror(const Rotation& r) {
  Rotation m = r;
  for (auto& row : m) std::reverse(row.begin(), row.end());
  return m;
}

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult res;
  Rotation rot(static_cast<std::size_t>(g.order()));
  for (VertexSet block : BlockFinder(g).run()) {
    if (block.size() == 2) {
      Vertex a = block.first(), b = (block - VertexSet{a}).first();
      rot[a].push_back(b);
      rot[b].push_back(a);
      continue;
    }
    if (!embed_block(g, block, rot, res.note)) return res;
  }
  validate_embedding(g, rot);
  res.planar = true;
  res.embedding = Embedding{g, std::move(rot)};
  return res;
}

DiscPlanarityResult is_disc_planar(const Graph& g, const std::vector<Vertex>& s, bool fixed_cyclic_order) {
  DiscPlanarityResult res;
  if (s.empty()) throw PreconditionError("boundary must be nonempty");
  VertexSet sset;
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw PreconditionError("boundary vertex out of range");
    if (sset.contains(v)) throw PreconditionError("boundary repeats a vertex");
    sset.insert(v);
  }
  // Three or fewer boundary vertices admit every cyclic order up to mirroring.
  bool ordered = fixed_cyclic_order && s.size() >= 4;
  int n = g.order();
  int extra = 1 + (ordered ? static_cast<int>(s.size()) : 0);
  if (n + extra > Graph::kMaxOrder) throw UnsupportedSize("disc-planarity test exceeds 64 vertices");

  Graph aug(n + extra);
  for (auto [u, v] : g.edges()) aug.add_edge(u, v);
  Vertex apex = n;
  for (Vertex v : s) aug.add_edge(apex, v);
  if (ordered) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Vertex c = n + 1 + static_cast<Vertex>(i);
      aug.add_edge(s[i], c);
      aug.add_edge(c, s[(i + 1) % s.size()]);
    }
  }
  auto pr = is_planar(aug);
  if (!pr.planar) {
    res.note = pr.note;
    return res;
  }
  res.planar = true;

  Rotation rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : pr.embedding->rotation[v]) {
      if (u < n) rot[v].push_back(u);
    }
  }
  auto pick = [&](const Rotation& r) -> std::optional<DiscEmbedding> {
    auto fs = faces(g, r);
    for (std::size_t f = 0; f < fs.size(); ++f) {
      const auto& walk = fs[f].walk;
      if (!sset.subset_of(VertexSet::of(walk))) continue;
      std::vector<Vertex> order;
      if (ordered) {
        if (!walk_has_cyclic_order(walk, s)) continue;
        order = s;
      } else {
        // Boundary in order of first appearance, starting from s[0].
        std::size_t start = std::find(walk.begin(), walk.end(), s[0]) - walk.begin();
        VertexSet placed;
        for (std::size_t i = 0; i < walk.size(); ++i) {
          Vertex v = walk[(start + i) % walk.size()];
          if (sset.contains(v) && !placed.contains(v)) {
            placed.insert(v);
            order.push_back(v);
          }
        }
        if (!walk_has_cyclic_order(walk, order)) continue;
      }
      return DiscEmbedding{g, r, static_cast<int>(f), order};
    }
    return std::nullopt;
  };
  res.embedding = pick(rot);
  if (!res.embedding && ordered) res.embedding = pick(mirror(rot));
  if (!res.embedding) {
    res.note = "boundary spans several components; no single outer walk";
  } else {
    validate_disc_embedding(*res.embedding);
  }
  return res;
}

std::vector<int> incident_faces(const std::vector<Face>& fs, const Element& x) {
  std::vector<int> out;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    bool hit = false;
    if (const Vertex* v = std::get_if<Vertex>(&x)) {
      hit = fs[f].contains(*v);
    } else {
      auto [a, b] = std::get<Edge>(x);
      hit = fs[f].has_dart(a, b) || fs[f].has_dart(b, a);
    }
    if (hit) out.push_back(static_cast<int>(f));
  }
  return out;
}

bool cofacial(const DiscEmbedding& e, const Element& x, const Element& y) {
  auto check = [&](const Element& el) {
    if (const Vertex* v = std::get_if<Vertex>(&el)) {
      if (*v < 0 || *v >= e.host.order()) throw DomainError("vertex not in host");
    } else {
      auto [a, b] = std::get<Edge>(el);
      if (a < 0 || b < 0 || a >= e.host.order() || b >= e.host.order() || !e.host.adjacent(a, b)) {
        throw DomainError("edge not in host");
      }
    }
  };
  check(x);
  check(y);
  auto fs = faces(e);
  auto fx = incident_faces(fs, x), fy = incident_faces(fs, y);
  for (int f : fx) {
    if (std::find(fy.begin(), fy.end(), f) != fy.end()) return true;
  }
  return false;
}

std::vector<Vertex> clockwise_cycle(const DiscEmbedding& e, const std::vector<Vertex>& cycle) {
  std::size_t m = cycle.size();
  if (m < 3) throw DomainError("cycle needs at least 3 vertices");
  for (std::size_t i = 0; i < m; ++i) {
    if (!e.host.adjacent(cycle[i], cycle[(i + 1) % m])) throw DomainError("cycle uses a non-edge");
  }
  auto fs = faces(e);
  int n = e.host.order();
  std::vector<int> face_of(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto& w = fs[f].walk;
    if (w.size() < 2) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      face_of[static_cast<std::size_t>(w[i]) * n + w[(i + 1) % w.size()]] = static_cast<int>(f);
    }
  }
  std::vector<int> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Graph on_cycle(n);
  for (std::size_t i = 0; i < m; ++i) on_cycle.add_edge(cycle[i], cycle[(i + 1) % m]);
  for (auto [a, b] : e.host.edges()) {
    if (on_cycle.adjacent(a, b)) continue;
    int f1 = find(face_of[static_cast<std::size_t>(a) * n + b]);
    int f2 = find(face_of[static_cast<std::size_t>(b) * n + a]);
    if (f1 != f2) parent[f1] = f2;
  }
  int exterior = find(e.outer_face);
  int forward = find(face_of[static_cast<std::size_t>(cycle[0]) * n + cycle[1]]);
  if (forward == exterior) return cycle;
  std::vector<Vertex> rev{cycle[0]};
  for (std::size_t i = m - 1; i >= 1; --i) rev.push_back(cycle[i]);
  return rev;
}

std::vector<Vertex> clockwise_subpath(const DiscEmbedding& e, const std::vector<Vertex>& cycle, Vertex u,
                                      Vertex v) {
  auto in = [&](Vertex x) { return std::find(cycle.begin(), cycle.end(), x) != cycle.end(); };
  if (!in(u) || !in(v)) throw DomainError("endpoint not on the cycle");
  if (u == v) return {u};
  auto cw = clockwise_cycle(e, cycle);
  std::size_t m = cw.size();
  std::size_t i = std::find(cw.begin(), cw.end(), u) - cw.begin();
  std::vector<Vertex> out;
  while (true) {
    out.push_back(cw[i]);
    if (cw[i] == v) break;
    i = (i + 1) % m;
  }
  return out;
}

}  // namespace wheelforge
