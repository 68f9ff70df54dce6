#pragma once

// Second enumeration route for the obstruction catalog: every interior graph
// up to isomorphism combined with every multiset of boundary neighborhoods.

#include <functional>
#include <vector>

#include "oracles.hpp"
#include "wheelforge/obstructions.hpp"

namespace routes {

using namespace wheelforge;

// Calls `visit` with each configuration (boundary 0..4, interior 5..) for
// interior orders 1..max_interior. Duplicates up to isomorphism may occur.
inline void for_each_configuration(int max_interior, const std::function<void(const Graph&)>& visit) {
  for (int m = 1; m <= max_interior; ++m) {
    int subsets = 1 << m;
    for (const Graph& h : oracle::all_unlabelled(m)) {
      std::vector<int> nb(5, 0);
      std::function<void(int, int)> rec = [&](int i, int from) {
        if (i == 5) {
          Graph g(5 + m);
          for (auto [u, v] : h.edges()) g.add_edge(5 + u, 5 + v);
          for (int b = 0; b < 5; ++b)
            for (int x = 0; x < m; ++x)
              if ((nb[b] >> x) & 1) g.add_edge(b, 5 + x);
          visit(g);
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
}

}  // namespace routes
