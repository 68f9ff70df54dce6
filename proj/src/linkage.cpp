#include "wheelforge/linkage.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace wheelforge {

namespace {

void check_terminals(const Graph& g, const Terminals& t) {
  VertexSet seen;
  for (Vertex v : t) {
    if (v < 0 || v >= g.order()) throw PreconditionError("terminal out of range");
    if (seen.contains(v)) throw PreconditionError("terminals must be distinct");
    seen.insert(v);
  }
}

std::string describe(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Shortest path from a to b inside `within`, or empty.
std::vector<Vertex> bfs_path(const Graph& g, Vertex a, Vertex b, VertexSet within) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{a};
  VertexSet seen = VertexSet::single(a);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == b) {
      std::vector<Vertex> p;
      for (Vertex y = b; y != -1; y = parent[y]) p.push_back(y);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (Vertex y : g.neighbors(x) & within) {
      if (seen.contains(y)) continue;
      seen.insert(y);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return {};
}

}  // namespace

HypothesisCheck hypothesis_holds(const Graph& g, const Terminals& t) {
  check_terminals(g, t);
  VertexSet terms = VertexSet::of(t);
  int n = g.order();
  HypothesisCheck out;
  std::vector<Vertex> pick;
  std::function<bool(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      VertexSet s = VertexSet::of(pick);
      for (VertexSet c : g.components(g.vertices() - s)) {
        if (!c.intersects(terms)) {
          out = {false, s, c};
          return true;
        }
      }
      return false;
    }
    for (Vertex v = from; v < n; ++v) {
      pick.push_back(v);
      bool found = rec(v + 1, left - 1);
      pick.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (int k = 0; k <= 3 && k <= n; ++k)
    if (rec(0, k)) return out;
  return out;
}

LinkageResult solve_two_linkage(const Graph& g, const Terminals& t) {
  auto hyp = hypothesis_holds(g, t);
  if (!hyp.holds) {
    throw PreconditionError("hypothesis fails: component " + describe(hyp.component) + " of G - " +
                            describe(hyp.separator) + " has no terminal");
  }
  auto [s1, s2, t1, t2] = t;
  VertexSet all = g.vertices();
  VertexSet avoid1 = VertexSet{s2, t2};

  // s1 -> t1 paths avoiding s2, t2, collected then tried shortest first.
  std::vector<std::vector<Vertex>> firsts;
  std::vector<Vertex> path{s1};
  VertexSet on = VertexSet::single(s1);
  std::function<void()> dfs = [&]() {
    Vertex x = path.back();
    if (x == t1) {
      firsts.push_back(path);
      return;
    }
    for (Vertex y : g.neighbors(x) - on - avoid1) {
      on.insert(y);
      path.push_back(y);
      dfs();
      path.pop_back();
      on.erase(y);
    }
  };
  dfs();
  std::stable_sort(firsts.begin(), firsts.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });

  LinkageResult r;
  for (const auto& p1 : firsts) {
    auto p2 = bfs_path(g, s2, t2, all - VertexSet::of(p1));
    if (!p2.empty()) {
      r.paths = PathSystem{{p1, p2}};
      return r;
    }
  }
  auto dp = is_disc_planar(g, {s1, s2, t1, t2}, true);
  r.planar = dp.planar;
  r.witness = dp.embedding;
  return r;
}

std::string check_linkage(const Graph& g, const Terminals& t, const LinkageResult& r) {
  auto [s1, s2, t1, t2] = t;
  if (r.paths && r.planar) return "both branches populated";
  if (r.paths) {
    const auto& ps = r.paths->paths;
    if (ps.size() != 2) return "expected two paths";
    if (auto err = check_path_system(g, *r.paths); !err.empty()) return err;
    if (ps[0].front() != s1 || ps[0].back() != t1) return "first path does not join s1 to t1";
    if (ps[1].front() != s2 || ps[1].back() != t2) return "second path does not join s2 to t2";
    return {};
  }
  if (!r.planar) return "neither branch holds";
  if (r.witness) {
    try {
      validate_disc_embedding(*r.witness);
    } catch (const Error& e) {
      return e.what();
    }
    if (!(r.witness->host == g)) return "witness host differs";
    if (r.witness->boundary != std::vector<Vertex>{s1, s2, t1, t2}) return "witness boundary order differs";
  } else if (g.is_connected()) {
    return "planar branch without embedding on a connected graph";
  }
  return {};
}

}  // namespace wheelforge
