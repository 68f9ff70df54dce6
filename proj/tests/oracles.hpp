#pragma once

// Independent brute-force references used by the unit and acceptance tests.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wheelforge/graph.hpp"
#include "wheelforge/wheels.hpp"

namespace oracle {

using wheelforge::Graph;
using wheelforge::Vertex;

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[u].push_back(v);
  return adj;
}

// graph6 written bit by bit from the format description.
inline std::string graph6(const Graph& g) {
  int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
  while (bits.size() % 6) bits.push_back('0');
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    out.push_back(static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2)));
  }
  return out;
}

// Connectivity of the graph with `removed` deleted, by DFS over lists.
inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  int n = g.order();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!removed[u] && !seen[u] && g.adjacent(u, v)) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == alive;
}

// order > k and no set of fewer than k vertices disconnects g.
inline bool k_connected(const Graph& g, int k) {
  int n = g.order();
  if (n <= k) return false;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) >= k) continue;
    std::vector<char> removed(n);
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1U;
    if (!connected_without(g, removed)) return false;
  }
  return true;
}

// Smallest X meeting every path from A to B (X may contain A or B vertices).
inline int min_vertex_cut(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  int n = g.order();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    std::vector<char> removed(n);
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1U;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v : a)
      if (!removed[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (!removed[u] && !seen[u] && g.adjacent(u, v)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    bool blocked = true;
    for (int v : b)
      if (seen[v]) blocked = false;
    if (blocked) best = size;
  }
  return best;
}

// All simple paths starting at `from`, restricted to `allowed`, reported when
// the last vertex satisfies `is_end`. Paths do not continue past `stop` vertices.
inline void simple_paths(const Graph& g, int from, const std::vector<char>& allowed,
                         const std::function<bool(int)>& is_end,
                         const std::function<void(const std::vector<int>&)>& emit,
                         const std::function<bool(int)>& stop = nullptr) {
  int n = g.order();
  std::vector<int> path{from};
  std::vector<char> on(n, 0);
  on[from] = 1;
  std::function<void()> rec = [&]() {
    int v = path.back();
    if (is_end(v)) emit(path);
    if (stop && stop(v) && path.size() > 1) return;
    for (int u = 0; u < n; ++u) {
      if (!on[u] && allowed[u] && g.adjacent(u, v)) {
        on[u] = 1;
        path.push_back(u);
        rec();
        path.pop_back();
        on[u] = 0;
      }
    }
  };
  rec();
}

// Largest number of pairwise vertex-disjoint A-B paths, by exhaustive search
// over path systems (small graphs only).
inline int max_disjoint_paths(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  int n = g.order();
  std::vector<char> in_b(n, 0), all(n, 1);
  for (int v : b) in_b[v] = 1;
  std::vector<std::vector<std::uint32_t>> by_source;
  for (int s : a) {
    std::vector<std::uint32_t> masks;
    simple_paths(g, s, all, [&](int v) { return in_b[v] != 0; },
                 [&](const std::vector<int>& p) {
                   std::uint32_t m = 0;
                   for (int v : p) m |= 1U << v;
                   masks.push_back(m);
                 });
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    by_source.push_back(std::move(masks));
  }
  int best = 0;
  std::function<void(std::size_t, std::uint32_t, int)> rec = [&](std::size_t i, std::uint32_t used, int count) {
    best = std::max(best, count);
    if (i == by_source.size()) return;
    if (count + static_cast<int>(by_source.size() - i) <= best) return;
    rec(i + 1, used, count);
    for (auto m : by_source[i])
      if (!(m & used)) rec(i + 1, used | m, count + 1);
  };
  rec(0, 0, 0);
  return best;
}

inline bool isomorphic(const Graph& g, const Graph& h, std::uint64_t g_marked = 0, std::uint64_t h_marked = 0) {
  int n = g.order();
  if (n != h.order() || g.size() != h.size()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (((g_marked >> u) & 1U) != ((h_marked >> perm[u]) & 1U)) ok = false;
      for (int v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Faces of a rotation system given as lists; returns face vertex walks.
inline std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rot) {
  int n = static_cast<int>(rot.size());
  std::map<std::pair<int, int>, bool> used;
  std::vector<std::vector<int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v : rot[u]) {
      if (used[{u, v}]) continue;
      std::vector<int> walk;
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        walk.push_back(a);
        const auto& rb = rot[b];
        int i = static_cast<int>(std::find(rb.begin(), rb.end(), a) - rb.begin());
        int c = rb[(i + 1) % rb.size()];
        a = b;
        b = c;
      }
      out.push_back(walk);
    }
  }
  return out;
}

// Genus-zero rotation system search on one connected component `comp`;
// accepts when some face contains every vertex of `need`. Uses the Euler edge
// bound e <= 3v - 6 as an early rejection.
inline bool rotation_search(const Graph& g, const std::vector<int>& comp, const std::vector<int>& need) {
  int v = static_cast<int>(comp.size());
  if (v == 1) return true;
  int e = 0;
  for (int x : comp)
    for (int y : comp)
      if (x < y && g.adjacent(x, y)) ++e;
  if (v >= 3 && e > 3 * v - 6) return false;
  int n = g.order();
  std::vector<std::vector<int>> rot(n);
  for (int x : comp)
    for (int y = 0; y < n; ++y)
      if (g.adjacent(x, y)) rot[x].push_back(y);
  // Odometer over permutations of rot[x][1..].
  std::vector<int> ids = comp;
  while (true) {
    auto fs = trace_faces(rot);
    if (v - e + static_cast<int>(fs.size()) == 2) {
      for (const auto& f : fs) {
        bool all = true;
        for (int s : need)
          if (std::find(f.begin(), f.end(), s) == f.end()) all = false;
        if (all) return true;
      }
      if (need.size() <= 1 && !fs.empty()) {
        // A vertex with edges always lies on some face.
        return true;
      }
    }
    std::size_t i = 0;
    for (; i < ids.size(); ++i) {
      auto& r = rot[ids[i]];
      if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (i == ids.size()) return false;
  }
}

inline bool planar(const Graph& g) {
  for (auto comp : g.components()) {
    if (!rotation_search(g, comp.to_vector(), {})) return false;
  }
  return true;
}

// Disc-planarity by definition: each component embeds with a face holding its
// share of the boundary.
inline bool disc_planar(const Graph& g, const std::vector<int>& s) {
  for (auto comp : g.components()) {
    std::vector<int> need;
    for (int x : s)
      if (comp.contains(x)) need.push_back(x);
    if (!rotation_search(g, comp.to_vector(), need)) return false;
  }
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Every labelled graph on n vertices (n <= 6), in edge-mask order.
inline std::vector<Graph> all_labelled(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t m = 0; m < (1U << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(g);
  }
  return out;
}

// One representative per isomorphism class, by exhaustive permutation check
// keyed on the lexicographically largest relabeled adjacency string.
inline std::string brute_canonical(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) s.push_back(g.adjacent(perm[u], perm[v]) ? '1' : '0');
    if (s > best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline std::vector<Graph> all_unlabelled(int n) {
  std::map<std::string, Graph> reps;
  for (auto& g : all_labelled(n)) reps.emplace(brute_canonical(g), g);
  std::vector<Graph> out;
  for (auto& [k, g] : reps) out.push_back(g);
  return out;
}

// Disjoint s1-t1 and s2-t2 paths exist, by pairing every simple path of the
// first kind with every simple path of the second.
inline bool two_linkage(const Graph& g, int s1, int s2, int t1, int t2) {
  int n = g.order();
  std::vector<char> all(n, 1);
  auto masks = [&](int a, int b) {
    std::vector<std::uint64_t> out;
    simple_paths(g, a, all, [&](int v) { return v == b; },
                 [&](const std::vector<int>& p) {
                   std::uint64_t m = 0;
                   for (int v : p) m |= std::uint64_t{1} << v;
                   out.push_back(m);
                 },
                 [&](int v) { return v == b; });
    return out;
  };
  auto first = masks(s1, t1);
  auto second = masks(s2, t2);
  for (auto a : first)
    for (auto b : second)
      if (!(a & b)) return true;
  return false;
}

// For every S with |S| <= 3, each component of g - S holds a terminal.
inline bool linkage_hypothesis(const Graph& g, const std::vector<int>& terms) {
  int n = g.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) seen[v] = (mask >> v) & 1U;
    for (int r = 0; r < n; ++r) {
      if (seen[r]) continue;
      bool has = false;
      std::vector<int> stack{r};
      seen[r] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (std::find(terms.begin(), terms.end(), v) != terms.end()) has = true;
        for (int u = 0; u < n; ++u)
          if (!seen[u] && g.adjacent(u, v)) {
            seen[u] = 1;
            stack.push_back(u);
          }
      }
      if (!has) return false;
    }
  }
  return true;
}

// Smallest k such that some assignment of k colors is proper, trying all
// k^n assignments for k = 1, 2, ... (n <= 9).
inline int chromatic_number(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  auto edges = g.edges();
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : edges)
        if (c[u] == c[v]) {
          ok = false;
          break;
        }
      if (ok) return k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

// K5-subdivision with branch set `branch`: every non-branch vertex is either
// unused or assigned to one of the ten pairs; each pair must then be joined
// inside its own assigned vertices.
inline bool k5_on_branch(const Graph& g, const std::vector<int>& branch) {
  int n = g.order();
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (std::find(branch.begin(), branch.end(), v) == branch.end()) others.push_back(v);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(branch[i], branch[j]);
  std::vector<int> slot(others.size(), 0);  // 0 = unused, 1..10 = pair
  while (true) {
    bool all = true;
    for (int p = 0; p < 10 && all; ++p) {
      std::vector<char> removed(n, 1);
      removed[pairs[p].first] = removed[pairs[p].second] = 0;
      for (std::size_t i = 0; i < others.size(); ++i)
        if (slot[i] == p + 1) removed[others[i]] = 0;
      std::vector<char> seen(n, 0);
      std::vector<int> stack{pairs[p].first};
      seen[pairs[p].first] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
          if (!removed[u] && !seen[u] && g.adjacent(u, v)) {
            seen[u] = 1;
            stack.push_back(u);
          }
      }
      if (!seen[pairs[p].second]) all = false;
    }
    if (all) return true;
    std::size_t i = 0;
    while (i < slot.size() && ++slot[i] == 11) slot[i++] = 0;
    if (i == slot.size()) return false;
  }
}

inline bool has_k5_subdivision(const Graph& g) {
  int n = g.order();
  if (n < 5) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + 5, 1);
  do {
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
      if (pick[v]) branch.push_back(v);
    if (k5_on_branch(g, branch)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Four paths from the center, each leaving the wheel through its own spoke
// end and then avoiding the wheel, ending in t, pairwise sharing only the
// center, with every s-vertex an endpoint. Exhaustive over path systems.
inline bool extendable(const Graph& g, const wheelforge::Wheel& wh, wheelforge::VertexSet t, wheelforge::VertexSet s) {
  if (s == t && t.size() == 5) s = {};
  int n = g.order();
  wheelforge::VertexSet on_wheel = wh.vertices();
  std::vector<std::pair<std::uint64_t, int>> paths;  // vertex mask without w, endpoint
  for (Vertex x : wh.spokes) {
    std::vector<char> allowed(n, 0);
    for (int v = 0; v < n; ++v) allowed[v] = !on_wheel.contains(v);
    allowed[x] = 1;
    simple_paths(g, x, allowed, [&](int v) { return t.contains(v); },
                         [&](const std::vector<int>& p) {
                           std::uint64_t m = 0;
                           for (int v : p) m |= std::uint64_t{1} << v;
                           paths.emplace_back(m, p.back());
                         });
  }
  std::function<bool(std::size_t, std::uint64_t, int, wheelforge::VertexSet)> rec = [&](std::size_t i, std::uint64_t used,
                                                                            int count, wheelforge::VertexSet ends) {
    if (count == 4) return s.subset_of(ends);
    for (std::size_t j = i; j < paths.size(); ++j) {
      if (paths[j].first & used) continue;
      wheelforge::VertexSet e2 = ends;
      e2.insert(paths[j].second);
      if (rec(j + 1, used | paths[j].first, count + 1, e2)) return true;
    }
    return false;
  };
  return rec(0, 0, 0, {});
}

// A K5-subdivision certificate checked against the definition: five distinct
// branch vertices; path i is a walk along edges from branch[pairs[i].first]
// to branch[pairs[i].second] without repeats; interiors avoid the branch set
// and each other.
inline bool k5_certificate_valid(const Graph& g, const std::array<int, 5>& branch,
                                 const std::array<std::vector<int>, 10>& paths) {
  static const int pairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  int n = g.order();
  std::vector<int> role(n, 0);  // 1 = branch, 2 = used interior
  for (int b : branch) {
    if (b < 0 || b >= n || role[b] != 0) return false;
    role[b] = 1;
  }
  for (int i = 0; i < 10; ++i) {
    const auto& p = paths[i];
    if (p.size() < 2 || p.front() != branch[pairs[i][0]] || p.back() != branch[pairs[i][1]]) return false;
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (p[j + 1] < 0 || p[j + 1] >= n || !g.adjacent(p[j], p[j + 1])) return false;
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (role[p[j]] != 0) return false;
      role[p[j]] = 2;
    }
  }
  return true;
}

}  // namespace oracle
