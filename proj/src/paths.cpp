#include "wheelforge/paths.hpp"

#include <algorithm>
#include <deque>

namespace wheelforge {

namespace {

// Unit-capacity network on split vertices: node 0 = super source, 1 = super
// sink, 2v = v_in, 2v+1 = v_out (offset by 2).
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, VertexSet allowed) : n_(g.order()), adj_(2 * n_ + 2) {
    for (Vertex v : allowed) add_arc(in(v), out(v));
    for (Vertex v : allowed) {
      for (Vertex u : g.neighbors(v) & allowed) add_arc(out(v), in(u));
    }
  }

  static int in(Vertex v) { return 2 + 2 * v; }
  static int out(Vertex v) { return 3 + 2 * v; }
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  // Terminal arcs get capacity n so a minimum cut consists of vertices only.
  void add_arc(int from, int to, int cap = 1) {
    adj_[from].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    cap_.push_back(cap);
    adj_[to].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    cap_.push_back(0);
  }

  // One BFS augmentation; returns false when no augmenting path exists.
  bool augment() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{kSource};
    seen[kSource] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int a : adj_[x]) {
        int y = to_[a];
        if (cap_[a] == 0 || seen[y]) continue;
        seen[y] = 1;
        via[y] = a;
        if (y == kSink) {
          for (int z = kSink; z != kSource; z = to_[via[z] ^ 1]) {
            --cap_[via[z]];
            ++cap_[via[z] ^ 1];
          }
          return true;
        }
        queue.push_back(y);
      }
    }
    return false;
  }

  int saturate(int limit) {
    int f = 0;
    while (f < limit && augment()) ++f;
    return f;
  }

  // Vertices v with v_in reachable from the source in the residual network
  // but v_out not: a minimum vertex cut.
  VertexSet residual_cut() const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{kSource};
    seen[kSource] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int a : adj_[x]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
      }
    }
    VertexSet cut;
    for (Vertex v = 0; v < n_; ++v) {
      if (seen[in(v)] && !seen[out(v)]) cut.insert(v);
    }
    return cut;
  }

  std::vector<std::vector<Vertex>> paths() const {
    std::vector<std::vector<Vertex>> result;
    for (int a : adj_[kSource]) {
      if (a % 2 != 0 || cap_[a ^ 1] == 0) continue;
      std::vector<Vertex> p;
      int x = to_[a];
      while (x != kSink) {
        // x is some v_in; flow passes to v_out.
        Vertex v = (x - 2) / 2;
        p.push_back(v);
        int next = -1;
        for (int b : adj_[out(v)]) {
          if (b % 2 == 0 && cap_[b ^ 1] > 0) {
            next = to_[b];
            break;
          }
        }
        x = next;
      }
      result.push_back(std::move(p));
    }
    return result;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

}  // namespace

Routing disjoint_paths(const Graph& g, VertexSet sources, VertexSet sinks, int k,
                       VertexSet mandatory_sinks, std::optional<VertexSet> allowed) {
  VertexSet live = allowed.value_or(g.vertices()) & g.vertices();
  sources &= live;
  sinks &= live;
  if (k < 1) throw Infeasible("k must be at least 1");
  if (k > sources.size() || k > sinks.size()) {
    throw Infeasible("k=" + std::to_string(k) + " exceeds |sources|=" + std::to_string(sources.size()) +
                     " or |sinks|=" + std::to_string(sinks.size()));
  }
  if (!mandatory_sinks.subset_of(sinks)) throw PreconditionError("mandatory sinks must be sinks");
  if (mandatory_sinks.size() > k) throw Infeasible("more mandatory sinks than paths");

  SplitNetwork net(g, live);
  for (Vertex v : sources) net.add_arc(SplitNetwork::kSource, SplitNetwork::in(v), g.order());
  Routing r;
  int flow = 0;
  if (!mandatory_sinks.empty()) {
    for (Vertex v : mandatory_sinks) net.add_arc(SplitNetwork::out(v), SplitNetwork::kSink, g.order());
    flow = net.saturate(mandatory_sinks.size());
    if (flow < mandatory_sinks.size()) {
      r.cut = net.residual_cut();
      r.mandatory_shortfall = true;
      // Keep going so max_routable reports the unconstrained maximum.
      for (Vertex v : sinks - mandatory_sinks) net.add_arc(SplitNetwork::out(v), SplitNetwork::kSink, g.order());
      r.max_routable = flow + net.saturate(Graph::kMaxOrder);
      return r;
    }
  }
  for (Vertex v : sinks - mandatory_sinks) net.add_arc(SplitNetwork::out(v), SplitNetwork::kSink, g.order());
  flow += net.saturate(Graph::kMaxOrder);
  r.max_routable = flow;
  if (flow < k) {
    r.cut = net.residual_cut();
    return r;
  }

  auto all = net.paths();
  // Keep every path ending at a mandatory sink, then the others by ascending
  // endpoint, until k paths remain.
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    bool ma = mandatory_sinks.contains(a.back()), mb = mandatory_sinks.contains(b.back());
    if (ma != mb) return ma;
    return a.back() < b.back();
  });
  all.resize(static_cast<std::size_t>(k));
  std::sort(all.begin(), all.end());
  r.paths = PathSystem{std::move(all)};
  return r;
}

int local_connectivity(const Graph& g, Vertex u, Vertex v, int cap) {
  if (g.adjacent(u, v)) throw PreconditionError("local_connectivity needs nonadjacent vertices");
  VertexSet rest = g.vertices() - VertexSet{u, v};
  VertexSet a = g.neighbors(u), b = g.neighbors(v);
  if (a.empty() || b.empty()) return 0;
  SplitNetwork net(g, rest);
  for (Vertex x : a) net.add_arc(SplitNetwork::kSource, SplitNetwork::in(x));
  for (Vertex x : b) net.add_arc(SplitNetwork::out(x), SplitNetwork::kSink);
  return net.saturate(cap);
}

bool is_k_connected(const Graph& g, int k) {
  int n = g.order();
  if (n <= k) return false;
  if (k <= 0) return true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < k) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.vertices() - g.neighbors(u)) {
      if (v <= u) continue;
      if (local_connectivity(g, u, v, k) < k) return false;
    }
  }
  return true;
}

int connectivity(const Graph& g) {
  int k = 0;
  while (is_k_connected(g, k + 1)) ++k;
  return k;
}

}  // namespace wheelforge
