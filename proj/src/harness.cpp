#include "wheelforge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "wheelforge/corpus.hpp"
#include "wheelforge/linkage.hpp"
#include "wheelforge/paths.hpp"

namespace wheelforge {

namespace {

// ---------------------------------------------------------------------------
// Hajós filter

std::string hajos_failure(const HajosCheck& h) {
  if (h.coloring_checked && h.coloring) return "4_colorable";
  if (h.k5_checked && h.k5) return "k5_subdivision";
  if (h.four_connected && !*h.four_connected) return "not_4_connected";
  if (h.five_connected && *h.five_connected) return "5_connected";
  return {};
}

// ---------------------------------------------------------------------------
// Extension outcomes

std::vector<Vertex> rim_non_spokes(const Wheel& wheel) {
  std::vector<Vertex> out;
  VertexSet spokes = wheel.spoke_set();
  for (Vertex v : wheel.rim)
    if (!spokes.contains(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool rim_edge(const Wheel& wheel, Vertex a, Vertex b) {
  std::size_t k = wheel.rim.size();
  for (std::size_t i = 0; i < k; ++i) {
    Vertex x = wheel.rim[i], y = wheel.rim[(i + 1) % k];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

// Proper separations of g with the given cut: side 1 is the cut plus a
// nonempty, non-total selection of the components of g - cut.
bool first_split(const Graph& g, VertexSet cut, const std::function<bool(VertexSet, VertexSet)>& accept,
                 Separation& found) {
  auto comps = g.components(g.vertices() - cut);
  std::size_t m = comps.size();
  if (m < 2 || m > 20) return false;
  for (std::uint32_t sel = 1; sel + 1 < (std::uint32_t{1} << m); ++sel) {
    VertexSet s1 = cut, s2 = cut;
    for (std::size_t i = 0; i < m; ++i) ((sel >> i) & 1U ? s1 : s2) |= comps[i];
    if (accept(s1, s2)) {
      found = Separation{cut, s1, s2, 1};
      return true;
    }
  }
  return false;
}

std::vector<std::pair<Vertex, Vertex>> pairs_of(const std::vector<Vertex>& xs) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) out.emplace_back(xs[i], xs[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Shared corpus helpers

struct ItemResult {
  long long instances = 0;
  std::map<std::string, long long> outcomes;
  std::vector<Counterexample> counterexamples;
};

// Per-item fan-out; results merge in input order.
void run_items(std::size_t count, int jobs, const std::function<ItemResult(std::size_t)>& work, LemmaReport& report) {
  constexpr std::size_t kBlock = 4096;
  jobs = std::max(1, jobs);
  std::vector<ItemResult> block;
  for (std::size_t base = 0; base < count; base += kBlock) {
    std::size_t len = std::min(kBlock, count - base);
    block.assign(len, {});
    std::atomic<std::size_t> next{0};
    auto body = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < len;) block[i] = work(base + i);
    };
    if (jobs == 1) {
      body();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(body);
      for (auto& th : pool) th.join();
    }
    for (auto& r : block) {
      report.instances += r.instances;
      for (auto& [k, v] : r.outcomes) report.outcomes[k] += v;
      for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
    }
  }
}

struct DiscSide {
  Separation separation;  // cut edges on side 2, so the cut is independent in side 1
  Graph graph;            // side 1, re-densified
  std::vector<int> id_map;
  std::vector<Vertex> host_id;  // inverse of id_map
  std::vector<Vertex> boundary;  // cut in side ids
  std::optional<DiscEmbedding> embedding;
  std::vector<Edge> edges;  // side 1 edges in host ids, sorted
};

// Both orientations of every k-separation whose side 1 has at least
// min_side vertices and is disc-planar with the cut on its boundary.
void for_each_disc_side(const Graph& g, int k, int min_side, const std::function<void(DiscSide&&)>& sink) {
  if (k >= g.order()) return;
  for_each_k_separation(g, k, min_side, [&](const Separation& sep) {
    for (auto [a, b] : {std::pair{sep.side1, sep.side2}, std::pair{sep.side2, sep.side1}}) {
      if (a.size() < min_side) continue;
      DiscSide d;
      d.separation = Separation{sep.cut, a, b, 2};
      d.graph = side_graph(g, d.separation, Side::first, &d.id_map);
      d.host_id.assign(static_cast<std::size_t>(d.graph.order()), -1);
      for (Vertex v = 0; v < g.order(); ++v)
        if (d.id_map[v] >= 0) d.host_id[d.id_map[v]] = v;
      for (Vertex v : sep.cut) d.boundary.push_back(d.id_map[v]);
      auto dp = is_disc_planar(d.graph, d.boundary, false);
      if (!dp.planar) continue;
      d.embedding = std::move(dp.embedding);
      d.edges = side_edges(g, d.separation, Side::first);
      std::sort(d.edges.begin(), d.edges.end());
      sink(std::move(d));
    }
    return true;
  });
}

// Subgraph order on side 1.
bool proper_subgraph(const DiscSide& x, const DiscSide& y) {
  if (!x.separation.side1.subset_of(y.separation.side1)) return false;
  if (!std::includes(y.edges.begin(), y.edges.end(), x.edges.begin(), x.edges.end())) return false;
  return x.separation.side1 != y.separation.side1 || x.edges != y.edges;
}

std::vector<std::size_t> minimal_indices(const std::vector<DiscSide>& sides) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < sides.size() && minimal; ++j)
      if (j != i && proper_subgraph(sides[j], sides[i])) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

Wheel to_host(const Wheel& w, const std::vector<Vertex>& host_id) {
  Wheel out;
  out.center = host_id[w.center];
  for (Vertex v : w.rim) out.rim.push_back(host_id[v]);
  for (Vertex v : w.spokes) out.spokes.push_back(host_id[v]);
  return out;
}

std::vector<Vertex> to_host(const std::vector<Vertex>& xs, const std::vector<Vertex>& host_id) {
  std::vector<Vertex> out;
  for (Vertex v : xs) out.push_back(host_id[v]);
  return out;
}

// ---------------------------------------------------------------------------
// L2LINK

// Exhaustive: an s1-t1 path whose removal leaves s2 and t2 connected.
std::optional<PathSystem> brute_linkage(const Graph& g, const Terminals& t) {
  auto [s1, s2, t1, t2] = t;
  std::optional<PathSystem> found;
  std::vector<Vertex> path{s1};
  VertexSet blocked{s2, t2};
  std::function<bool(Vertex, VertexSet)> dfs = [&](Vertex v, VertexSet used) -> bool {
    if (v == t1) {
      VertexSet rest = g.vertices() - used;
      if (!g.reach(VertexSet::single(s2), rest).contains(t2)) return false;
      // Any s2-t2 path in the remainder: BFS parents.
      std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
      std::vector<Vertex> queue{s2};
      VertexSet seen = VertexSet::single(s2);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex u : g.neighbors(queue[i]) & rest) {
          if (seen.contains(u)) continue;
          seen.insert(u);
          parent[u] = queue[i];
          queue.push_back(u);
        }
      }
      std::vector<Vertex> q;
      for (Vertex x = t2; x != -1; x = parent[x]) q.push_back(x);
      std::reverse(q.begin(), q.end());
      found = PathSystem{{path, q}};
      return true;
    }
    for (Vertex u : g.neighbors(v) - used - blocked) {
      path.push_back(u);
      if (dfs(u, used | VertexSet::single(u))) return true;
      path.pop_back();
    }
    return false;
  };
  dfs(s1, VertexSet::single(s1));
  return found;
}

ItemResult check_l2link(const Graph& g) {
  ItemResult r;
  int n = g.order();
  Json dummy;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          // The three pairings {a,b|c,d}, {a,c|b,d}, {a,d|b,c} as (s1, s2, t1, t2).
          for (Terminals t : {Terminals{a, c, b, d}, Terminals{a, b, c, d}, Terminals{a, b, d, c}}) {
            if (!hypothesis_holds(g, t).holds) {
              ++r.outcomes["filtered"];
              continue;
            }
            ++r.instances;
            LinkageResult res = solve_two_linkage(g, t);
            Json cert{{"terminals", t}, {"result", to_json(res)}};
            std::string bad = check_linkage(g, t, res);
            if (bad.empty()) {
              if (res.has_paths()) {
                if (is_disc_planar(g, {t[0], t[1], t[2], t[3]}, true).planar) bad = "paths exist but the instance is planar";
              } else if (auto p = brute_linkage(g, t)) {
                bad = "planar branch returned but disjoint paths exist";
                cert["paths"] = to_json(*p);
              }
            }
            if (!bad.empty()) {
              cert["reason"] = bad;
              r.counterexamples.push_back({g, cert});
              continue;
            }
            ++r.outcomes[res.has_paths() ? "paths" : "planar"];
          }
        }
  return r;
}

// ---------------------------------------------------------------------------
// THM1

ItemResult check_thm1(const Graph& g) {
  ItemResult r;
  r.instances = 1;
  HajosCheck h = check_hajos_preconditions(g, false);
  if (!h.survives) {
    ++r.outcomes[h.first_failure];
    return r;
  }
  bool hit = false;
  for_each_disc_side(g, 4, 6, [&](DiscSide&& d) {
    if (hit) return;
    hit = true;
    r.counterexamples.push_back({g, {{"hajos", h.to_json()}, {"separation", to_json(d.separation)}}});
  });
  if (!hit) ++r.outcomes["survivor_without_separation"];
  return r;
}

// ---------------------------------------------------------------------------
// LEXT5

ItemResult check_lext5(const Graph& g) {
  ItemResult r;
  if (!is_k_connected(g, 4)) {
    ++r.outcomes["not_4_connected"];
    return r;
  }
  std::vector<DiscSide> qualifying;
  for (int k = 4; k <= 5; ++k) {
    for_each_disc_side(g, k, k + 1, [&](DiscSide&& d) {
      if (!d.embedding) return;
      if (find_good_wheels(*d.embedding, VertexSet::of(d.boundary)).empty()) return;
      qualifying.push_back(std::move(d));
    });
  }
  auto minimal = minimal_indices(qualifying);
  // Subject to a minimal side 1, a minimal cut.
  for (std::size_t i : minimal) {
    const DiscSide& d = qualifying[i];
    bool cut_minimal = true;
    for (std::size_t j : minimal) {
      const DiscSide& e = qualifying[j];
      if (j != i && e.edges == d.edges && e.separation.side1 == d.separation.side1 &&
          e.separation.cut.size() < d.separation.cut.size() && e.separation.cut.subset_of(d.separation.cut))
        cut_minimal = false;
    }
    if (!cut_minimal) continue;
    VertexSet t = VertexSet::of(d.boundary);
    for (const Wheel& w : find_good_wheels(*d.embedding, t)) {
      ++r.instances;
      ExtensionResult ext = is_extendable(*d.embedding, w, d.boundary, {});
      if (ext.extendable()) {
        ++r.outcomes["extendable"];
        continue;
      }
      r.counterexamples.push_back({g,
                                   {{"separation", to_json(d.separation)},
                                    {"wheel", to_json(to_host(w, d.host_id))},
                                    {"cut", to_host(ext.cut.to_vector(), d.host_id)},
                                    {"reason", "good wheel is not extendable"}}});
    }
  }
  if (qualifying.empty()) ++r.outcomes["no_qualifying_separation"];
  return r;
}

// ---------------------------------------------------------------------------
// CONSEC

bool consecutive(const std::vector<Vertex>& order, VertexSet s) {
  int k = static_cast<int>(order.size()), m = 0;
  for (Vertex v : order) m += s.contains(v);
  if (m <= 1 || m == k) return true;
  // Exactly one position where membership switches from out to in.
  int rises = 0;
  for (int i = 0; i < k; ++i)
    if (!s.contains(order[i]) && s.contains(order[(i + 1) % k])) ++rises;
  return rises == 1;
}

ItemResult check_consec(const Graph& g) {
  ItemResult r;
  if (!is_k_connected(g, 4)) {
    ++r.outcomes["not_4_connected"];
    return r;
  }
  std::vector<DiscSide> g1s;
  for_each_disc_side(g, 4, 6, [&](DiscSide&& d) { g1s.push_back(std::move(d)); });
  for (std::size_t i : minimal_indices(g1s)) {
    const DiscSide& d = g1s[i];
    const Graph& g1 = d.graph;
    VertexSet t = VertexSet::of(d.boundary);
    std::vector<DiscSide> hs;
    for_each_disc_side(g1, 5, 6, [&](DiscSide&& h) {
      const Separation& sep = h.separation;
      if (!t.subset_of(sep.side2) || t.subset_of(sep.cut)) return;
      if (!h.embedding) return;
      if (find_good_wheels(*h.embedding, VertexSet::of(h.boundary)).empty()) return;
      hs.push_back(std::move(h));
    });
    if (hs.empty()) {
      ++r.outcomes["no_qualifying_5_separation"];
      continue;
    }
    int best = 6;
    for (const auto& h : hs) best = std::min(best, (h.separation.cut & t).size());
    std::vector<DiscSide> tight;
    for (auto& h : hs)
      if ((h.separation.cut & t).size() == best) tight.push_back(std::move(h));
    for (std::size_t j : minimal_indices(tight)) {
      const DiscSide& h = tight[j];
      ++r.instances;
      VertexSet s_side;  // S in H ids
      for (Vertex v : h.separation.cut & t) s_side.insert(h.id_map[v]);
      std::vector<Vertex> order = h.boundary;
      std::sort(order.begin() + 1, order.end());
      bool ok = true;
      int planar_orders = 0;
      do {
        if (order[1] > order[4]) continue;  // one orientation per cycle
        if (!is_disc_planar(h.graph, order, true).planar) continue;
        ++planar_orders;
        if (!consecutive(order, s_side)) {
          ok = false;
          std::vector<Vertex> host_order;
          for (Vertex v : order) host_order.push_back(d.host_id[h.host_id[v]]);
          r.counterexamples.push_back({g,
                                       {{"g1_separation", to_json(d.separation)},
                                        {"h_cut", to_host(to_host(h.boundary, h.host_id), d.host_id)},
                                        {"cyclic_order", host_order},
                                        {"reason", "S is not consecutive in a planar cyclic order"}}});
          break;
        }
      } while (std::next_permutation(order.begin() + 1, order.end()));
      if (ok) ++r.outcomes[best <= 1 ? "trivially_consecutive" : "consecutive"];
      if (planar_orders == 0) ++r.outcomes["no_planar_order"];
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// L5CUTOBS

ItemResult check_l5cutobs(const Graph& g, const std::vector<Vertex>& boundary, const ObstructionOptions& opt,
                          const std::vector<ObstructionEntry>& catalog) {
  ItemResult r;
  if (!passes_local_filters(g, boundary, opt)) {
    ++r.outcomes["filtered"];
    return r;
  }
  ++r.instances;
  if (has_good_wheel(g, boundary)) {
    ++r.outcomes["good_wheel"];
  } else if (match_obstruction(catalog, g, boundary)) {
    ++r.outcomes["catalog"];
  } else {
    Json cert{{"boundary", boundary}, {"reason", "no good wheel and not in the catalog"}};
    auto dp = is_disc_planar(g, boundary, false);
    if (dp.embedding) cert["embedding"] = to_json(*dp.embedding);
    r.counterexamples.push_back({g, cert});
  }
  return r;
}

std::vector<Graph> boundary_configurations(int b, int max_interior) {
  std::vector<Graph> out;
  for (int m = 1; m <= max_interior; ++m) {
    int subsets = 1 << m;
    for (const Graph& h : all_graphs(m)) {
      std::vector<int> nb(static_cast<std::size_t>(b), 0);
      std::function<void(int, int)> rec = [&](int i, int from) {
        if (i == b) {
          Graph g(b + m);
          for (auto [u, v] : h.edges()) g.add_edge(b + u, b + v);
          for (int x = 0; x < b; ++x)
            for (int y = 0; y < m; ++y)
              if ((nb[x] >> y) & 1) g.add_edge(x, b + y);
          out.push_back(std::move(g));
          return;
        }
        for (int s = from; s < subsets; ++s) {
          nb[i] = s;
          rec(i + 1, s);
        }
      };
      rec(0, 0);
    }
  }
  return out;
}

std::vector<Vertex> default_boundary(const VerifyOptions& opt) {
  if (opt.boundary) return *opt.boundary;
  return {0, 1, 2, 3, 4};
}

}  // namespace

// ---------------------------------------------------------------------------

Json HajosCheck::to_json() const {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json("NOT CHECKED"); };
  Json j{{"four_connected", opt(four_connected)},
         {"five_connected", opt(five_connected)},
         {"k5_subdivision", k5_checked ? Json(k5.has_value()) : Json("NOT CHECKED")},
         {"four_colorable", coloring_checked ? Json(coloring.has_value()) : Json("NOT CHECKED")},
         {"minimality", "NOT CHECKED"},
         {"survives", survives}};
  if (k5) j["k5_certificate"] = wheelforge::to_json(*k5);
  if (coloring) j["coloring"] = wheelforge::to_json(*coloring);
  return j;
}

HajosCheck check_hajos_preconditions(const Graph& g, bool exhaustive) {
  HajosCheck h;
  auto done = [&] { return !exhaustive && !hajos_failure(h).empty(); };
  h.coloring = four_color(g);
  h.coloring_checked = true;
  if (!done()) {
    h.k5 = find_k5_subdivision(g);
    h.k5_checked = true;
  }
  if (!done()) h.four_connected = is_k_connected(g, 4);
  if (!done()) h.five_connected = is_k_connected(g, 5);
  h.first_failure = hajos_failure(h);
  h.survives = h.first_failure.empty();
  return h;
}

std::string to_string(OutcomeTag tag) {
  switch (tag) {
    case OutcomeTag::s_extendable: return "S_EXTENDABLE";
    case OutcomeTag::outcome_i: return "OUTCOME_I";
    case OutcomeTag::outcome_ii: return "OUTCOME_II";
    case OutcomeTag::outcome_iii: return "OUTCOME_III";
    case OutcomeTag::outcome_iv: return "OUTCOME_IV";
    case OutcomeTag::none: return "NONE";
  }
  return "NONE";
}

Json ExtensionOutcome::to_json() const {
  Json j{{"tag", to_string(tag)}};
  if (paths) j["paths"] = wheelforge::to_json(*paths);
  auto put = [&](const char* key, Vertex v) {
    if (v >= 0) j[key] = v;
  };
  put(tag == OutcomeTag::outcome_i ? "s" : "s1", s1);
  put("s2", s2);
  put("a", a);
  put("b", b);
  put("c", c);
  if (separation) j["separation"] = wheelforge::to_json(*separation);
  return j;
}

ExtensionOutcome classify_extension_outcomes(const DiscEmbedding& h, const std::vector<Vertex>& t_list, VertexSet s,
                                             const Wheel& wheel) {
  const Graph& g = h.host;
  VertexSet t = VertexSet::of(t_list);
  if (t_list.size() != 5 || t.size() != 5) throw PreconditionError("classification needs |t| = 5");
  if (!g.is_independent(t)) throw PreconditionError("t is not independent in H");
  if (!s.subset_of(t)) throw PreconditionError("s must be a subset of t");
  if (!is_good(wheel, t)) throw PreconditionError("wheel is not good for t");

  ExtensionOutcome o;
  ExtensionResult ext = is_extendable(h, wheel, t_list, s);
  if (ext.extendable()) {
    o.tag = OutcomeTag::s_extendable;
    o.paths = ext.paths;
    return o;
  }

  Vertex w = wheel.center;
  VertexSet wv = wheel.vertices(), nw = g.neighbors(w);
  VertexSet closed = nw | VertexSet::single(w);
  auto free = rim_non_spokes(wheel);
  auto s_off = (s - wv).to_vector();
  auto settle = [&](ExtensionOutcome& x) {
    std::string bad = check_outcome(g, t, s, wheel, x);
    if (!bad.empty()) throw Error("outcome witness failed its re-check: " + bad);
    return x;
  };

  // (i)
  for (Vertex si : s_off) {
    VertexSet nb = g.neighbors(si);
    if (nb.empty() || nb.size() > 2 || !nb.subset_of(VertexSet::of(free))) continue;
    Vertex a = nb.first(), b = nb.size() == 2 ? (nb - VertexSet::single(a)).first() : a;
    if (a == b || rim_edge(wheel, a, b)) {
      o.tag = OutcomeTag::outcome_i;
      o.s1 = si;
      o.a = a;
      o.b = b;
      return settle(o);
    }
  }
  Separation sep;
  // (ii)
  for (auto [s1, s2] : pairs_of(s_off)) {
    VertexSet pair{s1, s2};
    for (auto [a, b] : pairs_of(free)) {
      auto accept = [&](VertexSet side1, VertexSet side2) {
        return pair.subset_of(side1) && (t - pair).subset_of(side2 - side1) && (nw & side1).size() == 1;
      };
      if (first_split(g, VertexSet{a, b, w}, accept, sep)) {
        o.tag = OutcomeTag::outcome_ii;
        o.s1 = s1;
        o.s2 = s2;
        o.a = a;
        o.b = b;
        o.separation = sep;
        return settle(o);
      }
    }
  }
  // (iii)
  if (s.size() == 3) {
    for (auto [s1, s2] : pairs_of(s.to_vector())) {
      for (auto [a, b] : pairs_of(free)) {
        auto accept = [&](VertexSet side1, VertexSet side2) {
          return s.subset_of(side1) && ((t - s) | VertexSet::single(w)).subset_of(side2 - side1);
        };
        if (first_split(g, VertexSet{a, b, s1, s2}, accept, sep)) {
          o.tag = OutcomeTag::outcome_iii;
          o.s1 = s1;
          o.s2 = s2;
          o.a = a;
          o.b = b;
          o.separation = sep;
          return settle(o);
        }
      }
    }
  }
  // (iv)
  for (auto [a, b] : pairs_of(free)) {
    for (Vertex c : g.vertices() - wv) {
      auto accept = [&](VertexSet side1, VertexSet side2) {
        VertexSet ts = side1 & t;
        return !closed.intersects(side1) && ts.size() == 2 && ts.subset_of(s) && closed.subset_of(side2 - side1);
      };
      if (first_split(g, VertexSet{a, b, c}, accept, sep)) {
        o.tag = OutcomeTag::outcome_iv;
        o.a = a;
        o.b = b;
        o.c = c;
        o.separation = sep;
        return settle(o);
      }
    }
  }
  return o;
}

std::string check_outcome(const Graph& h, VertexSet t, VertexSet s, const Wheel& wheel, const ExtensionOutcome& o) {
  Vertex w = wheel.center;
  VertexSet wv = wheel.vertices(), nw = h.neighbors(w);
  VertexSet closed = nw | VertexSet::single(w);
  VertexSet rim_free = VertexSet::of(wheel.rim) - nw;
  auto in_free = [&](Vertex v) { return v >= 0 && rim_free.contains(v); };
  auto need_sep = [&](VertexSet cut) -> std::string {
    if (!o.separation) return "missing separation";
    std::string bad = check_separation(h, *o.separation);
    if (!bad.empty()) return bad;
    if (o.separation->cut != cut) return "separation cut differs from the named vertices";
    return {};
  };
  switch (o.tag) {
    case OutcomeTag::s_extendable:
      if (!o.paths) return "missing paths";
      return check_extension(h, wheel, t, s, *o.paths);
    case OutcomeTag::none:
      return {};
    case OutcomeTag::outcome_i: {
      if (o.s1 < 0 || !s.contains(o.s1) || wv.contains(o.s1)) return "s must lie in S outside the wheel";
      if (!in_free(o.a) || !in_free(o.b)) return "a and b must be rim vertices not adjacent to the center";
      if (h.neighbors(o.s1) != VertexSet{o.a, o.b}) return "N(s) is not {a, b}";
      if (o.a != o.b && !rim_edge(wheel, o.a, o.b)) return "ab is not a wheel edge";
      return {};
    }
    case OutcomeTag::outcome_ii: {
      VertexSet pair{o.s1, o.s2};
      if (o.s1 < 0 || o.s2 < 0 || o.s1 == o.s2 || !pair.subset_of(s - wv)) return "s1, s2 must be distinct S vertices off the wheel";
      if (!in_free(o.a) || !in_free(o.b) || o.a == o.b) return "a and b must be distinct free rim vertices";
      if (auto bad = need_sep(VertexSet{o.a, o.b, w}); !bad.empty()) return bad;
      const auto& sp = *o.separation;
      if (!pair.subset_of(sp.side1)) return "s1, s2 not in H1";
      if ((nw & sp.side1).size() != 1) return "H1 does not hold exactly one neighbor of the center";
      if (!(t - pair).subset_of(sp.side2)) return "boundary outside {s1, s2} not in H2";
      return {};
    }
    case OutcomeTag::outcome_iii: {
      VertexSet pair{o.s1, o.s2};
      if (s.size() != 3) return "|S| must be 3";
      if (o.s1 < 0 || o.s2 < 0 || o.s1 == o.s2 || !pair.subset_of(s)) return "s1, s2 must be distinct S vertices";
      if (!in_free(o.a) || !in_free(o.b) || o.a == o.b) return "a and b must be distinct free rim vertices";
      if (auto bad = need_sep(VertexSet{o.a, o.b, o.s1, o.s2}); !bad.empty()) return bad;
      const auto& sp = *o.separation;
      if (!s.subset_of(sp.side1)) return "S not in H1";
      if (!((t - s) | VertexSet::single(w)).subset_of(sp.side2)) return "center and t - S not in H2";
      return {};
    }
    case OutcomeTag::outcome_iv: {
      if (!in_free(o.a) || !in_free(o.b) || o.a == o.b) return "a and b must be distinct free rim vertices";
      if (o.c < 0 || o.c >= h.order() || wv.contains(o.c)) return "c must lie off the wheel";
      if (auto bad = need_sep(VertexSet{o.a, o.b, o.c}); !bad.empty()) return bad;
      const auto& sp = *o.separation;
      if (closed.intersects(sp.side1)) return "H1 meets the closed neighborhood of the center";
      VertexSet ts = sp.side1 & t;
      if (ts.size() != 2) return "H1 must hold exactly two boundary vertices";
      if (!ts.subset_of(s)) return "boundary vertices of H1 must lie in S";
      if (!closed.subset_of(sp.side2 - sp.side1)) return "closed neighborhood not inside H2 - H1";
      return {};
    }
  }
  return "unknown tag";
}

Json LemmaReport::to_json(bool include_timing) const {
  Json ce = Json::array();
  for (const auto& c : counterexamples) {
    ce.push_back({{"graph6", emit_graph6(c.graph)}, {"graph", wheelforge::to_json(c.graph)}, {"certificate", c.certificate}});
  }
  Json j{{"schema", kSchema},
         {"lemma", lemma},
         {"verdict", pass() ? "PASS" : "FAIL"},
         {"instances", instances},
         {"outcomes", outcomes},
         {"counterexamples", ce},
         {"notes", notes}};
  if (include_timing) j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"L2LINK", "L5CUTOBS", "LEXT5", "THM1", "CONSEC"};
  return ids;
}

std::vector<Graph> default_corpus(const std::string& lemma, const VerifyOptions& opt) {
  std::vector<Graph> out;
  if (lemma == "L5CUTOBS") {
    auto b = default_boundary(opt);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != static_cast<Vertex>(i)) throw UsageError("generated configurations need boundary 0..k-1");
    return boundary_configurations(static_cast<int>(b.size()), opt.max_interior);
  }
  bool four = lemma == "THM1" || lemma == "LEXT5" || lemma == "CONSEC";
  if (!four && lemma != "L2LINK") throw UsageError("unknown lemma id " + lemma);
  for (int n = std::max(1, opt.nmin); n <= opt.nmax; ++n) {
    auto level = four ? k_connected_graphs(n, 4) : all_graphs(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

LemmaReport verify_lemma(const std::string& lemma, const std::vector<Graph>& corpus, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  LemmaReport report;
  report.lemma = lemma;
  auto in_bounds = [&](const Graph& g) { return g.order() >= opt.nmin && g.order() <= opt.nmax; };
  std::function<ItemResult(std::size_t)> work;
  std::vector<ObstructionEntry> catalog;
  std::vector<Vertex> boundary;

  if (lemma == "L2LINK") {
    work = [&](std::size_t i) { return in_bounds(corpus[i]) ? check_l2link(corpus[i]) : ItemResult{}; };
    report.notes.push_back("terminal quadruples: one (s1,s2,t1,t2) per pairing of each 4-subset");
  } else if (lemma == "THM1") {
    work = [&](std::size_t i) { return in_bounds(corpus[i]) ? check_thm1(corpus[i]) : ItemResult{}; };
    report.notes.push_back("Hajos filter: 4-connected, not 5-connected, no K5-subdivision, not 4-colorable");
    report.notes.push_back("minimality: NOT CHECKED");
  } else if (lemma == "LEXT5") {
    work = [&](std::size_t i) { return in_bounds(corpus[i]) ? check_lext5(corpus[i]) : ItemResult{}; };
    report.notes.push_back("hosts: 4-connected; side 1 minimal among qualifying separations of the same host, then cut minimal");
  } else if (lemma == "CONSEC") {
    work = [&](std::size_t i) { return in_bounds(corpus[i]) ? check_consec(corpus[i]) : ItemResult{}; };
    report.notes.push_back("hosts: 4-connected; G1 minimal among planar-side 4-separations of the same host");
    report.notes.push_back("(H,L): |S| minimum then H minimal; every planar cyclic order of V(H cap L) is checked");
  } else if (lemma == "L5CUTOBS") {
    boundary = default_boundary(opt);
    if (boundary.size() != 5) throw UsageError("L5CUTOBS boundary needs 5 vertices");
    ObstructionOptions o = opt.obstruction;
    o.max_interior = opt.max_interior;
    catalog = opt.catalog ? *opt.catalog : enumerate_obstructions(o);
    work = [&](std::size_t i) { return check_l5cutobs(corpus[i], boundary, opt.obstruction, catalog); };
    report.notes.push_back(std::string("local filters: degree mode ") +
                           (opt.obstruction.degree == DegreeFilter::strict ? "strict" : "flagged") +
                           (opt.obstruction.require_fans ? ", fans required" : ""));
    report.notes.push_back("catalog entries: " + std::to_string(catalog.size()));
  } else {
    throw UsageError("unknown lemma id " + lemma);
  }
  run_items(corpus.size(), opt.jobs, work, report);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wheelforge
