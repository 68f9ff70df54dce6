#include "wheelforge/wheels.hpp"

#include <algorithm>

#include "wheelforge/paths.hpp"

namespace wheelforge {

VertexSet Wheel::vertices() const {
  VertexSet s = VertexSet::of(rim);
  s.insert(center);
  return s;
}

WheelVerdict wheel_at(const DiscEmbedding& e, Vertex w) {
  const Graph& g = e.host;
  if (w < 0 || w >= g.order()) throw PreconditionError("center out of range");
  auto fs = faces(e);
  if (fs[e.outer_face].contains(w)) throw PreconditionError("center lies on the outer face");

  WheelVerdict verdict;
  auto at = incident_faces(fs, Element{w});
  VertexSet closure;
  std::vector<Edge> rim_edges;
  for (int f : at) {
    const auto& walk = fs[f].walk;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
      closure.insert(a);
      if (a == w || b == w || a == b) continue;
      rim_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(rim_edges.begin(), rim_edges.end());
  rim_edges.erase(std::unique(rim_edges.begin(), rim_edges.end()), rim_edges.end());

  VertexSet rim_set = closure - VertexSet::single(w);
  if (g.degree(w) < 3) {
    verdict.violation = "center has fewer than three spokes";
    return verdict;
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
  for (auto [a, b] : rim_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (Vertex v : rim_set) {
    if (adj[v].size() != 2) {
      verdict.violation = "rim vertex " + std::to_string(v) + " has rim degree " + std::to_string(adj[v].size());
      return verdict;
    }
  }
  std::vector<Vertex> cycle{rim_set.first()};
  Vertex prev = -1;
  while (true) {
    Vertex cur = cycle.back();
    Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    if (next == cycle.front()) break;
    prev = cur;
    cycle.push_back(next);
  }
  if (static_cast<int>(cycle.size()) != rim_set.size()) {
    verdict.violation = "rim is not a single cycle";
    return verdict;
  }
  if (!g.neighbors(w).subset_of(rim_set)) {
    verdict.violation = "center has a neighbor off the rim";
    return verdict;
  }

  Wheel wh;
  wh.center = w;
  wh.rim = clockwise_cycle(e, cycle);
  std::rotate(wh.rim.begin(), std::min_element(wh.rim.begin(), wh.rim.end()), wh.rim.end());
  for (Vertex v : wh.rim)
    if (g.adjacent(w, v)) wh.spokes.push_back(v);
  verdict.wheel = std::move(wh);
  return verdict;
}

bool is_good(const Wheel& wheel, VertexSet t) {
  return (t & wheel.vertices()).subset_of(wheel.spoke_set());
}

std::vector<Wheel> find_good_wheels(const DiscEmbedding& e, VertexSet t) {
  std::vector<Wheel> out;
  auto fs = faces(e);
  const Face& outer = fs[e.outer_face];
  for (Vertex w = 0; w < e.host.order(); ++w) {
    if (t.contains(w) || outer.contains(w)) continue;
    auto verdict = wheel_at(e, w);
    if (verdict.defined() && is_good(*verdict.wheel, t)) out.push_back(*verdict.wheel);
  }
  return out;
}

std::string check_extension(const Graph& host, const Wheel& wheel, VertexSet t, VertexSet s,
                            const PathSystem& ps) {
  if (ps.paths.size() != 4) return "expected four paths, got " + std::to_string(ps.paths.size());
  if (s == t && t.size() == 5) s = {};
  Vertex w = wheel.center;
  if (auto err = check_path_system(host, ps, VertexSet::single(w)); !err.empty()) return err;
  VertexSet on_wheel = wheel.vertices();
  VertexSet ends;
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    std::string tag = "path " + std::to_string(i);
    if (p.size() < 2 || p.front() != w) return tag + " does not start at the center";
    if (!t.contains(p.back())) return tag + " does not end in t";
    int hits = 0;
    for (std::size_t j = 1; j < p.size(); ++j)
      if (on_wheel.contains(p[j])) ++hits;
    if (hits != 1) return tag + " meets the wheel in " + std::to_string(hits) + " vertices besides the center";
    ends.insert(p.back());
  }
  if (!s.subset_of(ends)) return "some s-vertex is not an endpoint";
  return {};
}

namespace {

// Paths in the reduced graph start at a spoke end and may pass through other
// spoke ends; keep only the suffix from the last one and hang it off w.
PathSystem hang_from_center(const PathSystem& flow, Vertex w, VertexSet spokes) {
  PathSystem out;
  for (const auto& p : flow.paths) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (spokes.contains(p[i])) last = i;
    std::vector<Vertex> q{w};
    q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(last), p.end());
    out.paths.push_back(std::move(q));
  }
  std::sort(out.paths.begin(), out.paths.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return out;
}

}  // namespace

ExtensionResult is_extendable(const DiscEmbedding& e, const Wheel& wheel, const std::vector<Vertex>& t_list,
                              VertexSet s) {
  const Graph& g = e.host;
  VertexSet t = VertexSet::of(t_list);
  if (t.size() < 4) throw Infeasible("extension needs at least four boundary vertices");
  if (!s.subset_of(t)) throw PreconditionError("s must be a subset of t");
  if (s == t && t.size() == 5) s = {};
  if (s.size() > 4) throw PreconditionError("|s| must be at most 4");
  if (!is_good(wheel, t)) throw PreconditionError("wheel is not good for t");

  Vertex w = wheel.center;
  VertexSet spokes = wheel.spoke_set();
  VertexSet unused_rim = VertexSet::of(wheel.rim) - spokes;
  VertexSet live = g.vertices() - unused_rim - VertexSet::single(w);

  ExtensionResult r;
  if (spokes.size() < 4) {
    r.cut = spokes;
    r.max_routable = spokes.size();
    return r;
  }
  // Endpoint sets in lexicographic order; the first routable one wins.
  std::vector<Vertex> ts = t.to_vector();
  std::vector<char> pick(ts.size(), 0);
  std::fill(pick.begin(), pick.begin() + 4, 1);
  do {
    VertexSet ends;
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (pick[i]) ends.insert(ts[i]);
    if (!s.subset_of(ends)) continue;
    auto routing = disjoint_paths(g, spokes, ends, 4, {}, live);
    if (routing.routed()) {
      r.paths = hang_from_center(*routing.paths, w, spokes);
      r.max_routable = 4;
      return r;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));

  auto witness = disjoint_paths(g, spokes, t, 4, s, live);
  if (witness.routed()) throw Error("extension search missed a routable endpoint set");
  r.cut = witness.cut;
  r.max_routable = witness.max_routable;
  r.mandatory_shortfall = witness.mandatory_shortfall;
  return r;
}

}  // namespace wheelforge
