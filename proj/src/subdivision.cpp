#include "wheelforge/subdivision.hpp"

#include <algorithm>
#include <functional>

#include "wheelforge/embedding.hpp"

namespace wheelforge {

std::string verify_k5_certificate(const Graph& g, const SubdivisionCertificate& cert) {
  VertexSet branch;
  for (Vertex b : cert.branch) {
    if (b < 0 || b >= g.order()) return "branch vertex " + std::to_string(b) + " out of range";
    if (branch.contains(b)) return "branch vertex " + std::to_string(b) + " repeated";
    branch.insert(b);
  }
  VertexSet used;
  for (std::size_t i = 0; i < cert.paths.size(); ++i) {
    const auto& p = cert.paths[i];
    auto [a, b] = kBranchPairs[i];
    std::string tag = "path " + std::to_string(cert.branch[a]) + "-" + std::to_string(cert.branch[b]);
    if (p.size() < 2 || p.front() != cert.branch[a] || p.back() != cert.branch[b]) return tag + " has wrong ends";
    VertexSet own;
    for (std::size_t j = 0; j < p.size(); ++j) {
      Vertex v = p[j];
      if (v < 0 || v >= g.order()) return tag + " leaves the graph";
      if (own.contains(v)) return tag + " repeats vertex " + std::to_string(v);
      own.insert(v);
      if (j + 1 < p.size() && (p[j + 1] < 0 || p[j + 1] >= g.order() || !g.adjacent(v, p[j + 1]))) {
        return tag + " uses non-edge " + std::to_string(v) + "-" + std::to_string(p[j + 1]);
      }
      if (j == 0 || j + 1 == p.size()) continue;
      if (branch.contains(v)) return tag + " passes through branch vertex " + std::to_string(v);
      if (used.contains(v)) return tag + " shares internal vertex " + std::to_string(v);
      used.insert(v);
    }
  }
  return {};
}

namespace {

class K5Search {
 public:
  explicit K5Search(const Graph& g) : g_(g) {}

  std::optional<SubdivisionCertificate> run() {
    std::vector<Vertex> cands;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (g_.degree(v) >= 4) cands.push_back(v);
    if (cands.size() < 5) return std::nullopt;
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    std::vector<int> idx;
    return choose(cands, 0, idx);
  }

 private:
  std::optional<SubdivisionCertificate> choose(const std::vector<Vertex>& cands, std::size_t from,
                                               std::vector<int>& idx) {
    if (idx.size() == 5) {
      for (int i = 0; i < 5; ++i) cert_.branch[i] = cands[idx[i]];
      branch_ = VertexSet::of(cert_.branch);
      if (route_all()) return cert_;
      return std::nullopt;
    }
    for (std::size_t i = from; i + (5 - idx.size()) <= cands.size(); ++i) {
      idx.push_back(static_cast<int>(i));
      auto r = choose(cands, i + 1, idx);
      idx.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  bool route_all() {
    // Adjacent branch pairs take the direct edge; this never hurts.
    order_.clear();
    for (int i = 0; i < 10; ++i) {
      auto [a, b] = kBranchPairs[i];
      if (g_.adjacent(cert_.branch[a], cert_.branch[b])) {
        cert_.paths[i] = {cert_.branch[a], cert_.branch[b]};
      } else {
        order_.push_back(i);
      }
    }
    // Each branch vertex needs one exit per non-adjacent partner.
    for (int a = 0; a < 5; ++a) {
      int need = 0;
      for (int b = 0; b < 5; ++b)
        if (a != b && !g_.adjacent(cert_.branch[a], cert_.branch[b])) ++need;
      if ((g_.neighbors(cert_.branch[a]) - branch_).size() < need) return false;
    }
    return route(0, g_.vertices() - branch_);
  }

  bool reachable(Vertex a, Vertex b, VertexSet free) const {
    VertexSet start = g_.neighbors(a) & free;
    return g_.reach(start, free).intersects(g_.neighbors(b));
  }

  bool route(std::size_t k, VertexSet free) {
    if (k == order_.size()) return true;
    for (std::size_t j = k; j < order_.size(); ++j) {
      auto [a, b] = kBranchPairs[order_[j]];
      if (!reachable(cert_.branch[a], cert_.branch[b], free)) return false;
    }
    int i = order_[k];
    auto [ia, ib] = kBranchPairs[i];
    Vertex a = cert_.branch[ia], b = cert_.branch[ib];
    std::vector<Vertex> path{a};
    std::function<bool(VertexSet)> extend = [&](VertexSet avail) -> bool {
      Vertex x = path.back();
      if (path.size() > 1 && g_.adjacent(x, b)) {
        path.push_back(b);
        cert_.paths[i] = path;
        bool ok = route(k + 1, avail);
        path.pop_back();
        if (ok) return true;
      }
      for (Vertex y : g_.neighbors(x) & avail) {
        path.push_back(y);
        bool ok = extend(avail - VertexSet::single(y));
        path.pop_back();
        if (ok) return true;
      }
      return false;
    };
    return extend(free);
  }

  const Graph& g_;
  SubdivisionCertificate cert_;
  VertexSet branch_;
  std::vector<int> order_;
};

}  // namespace

std::optional<SubdivisionCertificate> find_k5_subdivision(const Graph& g) {
  if (g.order() > 12) throw UnsupportedSize("K5-subdivision search is limited to order 12");
  int heavy = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 4) ++heavy;
  if (heavy < 5) return std::nullopt;
  if (is_planar(g).planar) return std::nullopt;
  return K5Search(g).run();
}

SubdivisionCertificate assemble_k5(const Graph& g, const Wheel& wheel, const PathSystem& extension,
                                   const PathSystem& links) {
  if (extension.paths.size() != 4) throw AssemblyError("extension must have four paths");
  if (links.paths.size() != 2) throw AssemblyError("links must be two paths");
  Vertex w = wheel.center;
  auto rim_pos = [&](Vertex v) {
    auto it = std::find(wheel.rim.begin(), wheel.rim.end(), v);
    if (it == wheel.rim.end()) throw AssemblyError("extension path leaves the center off the rim at " + std::to_string(v));
    return it - wheel.rim.begin();
  };
  std::vector<std::vector<Vertex>> ext = extension.paths;
  for (const auto& p : ext) {
    if (p.size() < 2 || p.front() != w) throw AssemblyError("extension path does not start at the center");
    if (!g.adjacent(w, p[1])) throw AssemblyError("extension path does not leave along a spoke");
  }
  std::sort(ext.begin(), ext.end(), [&](const auto& a, const auto& b) { return rim_pos(a[1]) < rim_pos(b[1]); });

  std::array<Vertex, 4> x{}, t{};
  for (int i = 0; i < 4; ++i) {
    x[i] = ext[i][1];
    t[i] = ext[i].back();
  }
  // Orient links as t1 -> t3 and t2 -> t4.
  std::vector<Vertex> q13, q24;
  for (auto q : links.paths) {
    if (q.empty()) throw AssemblyError("empty link");
    Vertex a = q.front(), b = q.back();
    auto want = [&](Vertex from, Vertex to, std::vector<Vertex>& slot) {
      if (a == to && b == from) std::reverse(q.begin(), q.end());
      if (q.front() == from && q.back() == to) {
        slot = q;
        return true;
      }
      return false;
    };
    if (!want(t[0], t[2], q13) && !want(t[1], t[3], q24)) {
      throw AssemblyError("link " + std::to_string(a) + "-" + std::to_string(b) +
                          " does not join opposite extension ends");
    }
  }
  if (q13.empty() || q24.empty()) throw AssemblyError("links do not cover both diagonals");

  auto arc = [&](Vertex from, Vertex to) {
    std::vector<Vertex> out;
    auto n = static_cast<std::ptrdiff_t>(wheel.rim.size());
    for (auto i = rim_pos(from);; i = (i + 1) % n) {
      out.push_back(wheel.rim[i]);
      if (wheel.rim[i] == to) break;
    }
    return out;
  };
  auto diagonal = [&](int i, int j, const std::vector<Vertex>& q) {
    std::vector<Vertex> out(ext[i].begin() + 1, ext[i].end());
    out.insert(out.end(), q.begin() + 1, q.end());
    std::vector<Vertex> back(ext[j].begin() + 1, ext[j].end() - 1);
    std::reverse(back.begin(), back.end());
    out.insert(out.end(), back.begin(), back.end());
    return out;
  };

  SubdivisionCertificate cert;
  cert.branch = {w, x[0], x[1], x[2], x[3]};
  for (int i = 0; i < 4; ++i) cert.paths[i] = {w, x[i]};
  cert.paths[4] = arc(x[0], x[1]);
  cert.paths[5] = diagonal(0, 2, q13);
  auto back = arc(x[3], x[0]);
  std::reverse(back.begin(), back.end());
  cert.paths[6] = back;
  cert.paths[7] = arc(x[1], x[2]);
  cert.paths[8] = diagonal(1, 3, q24);
  cert.paths[9] = arc(x[2], x[3]);
  if (auto err = verify_k5_certificate(g, cert); !err.empty()) throw AssemblyError("assembly clash: " + err);
  return cert;
}

}  // namespace wheelforge
