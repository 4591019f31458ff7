#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evenpan/digraph.hpp"
#include "evenpan/random.hpp"
#include "oracles.hpp"

namespace testing {

/// g with vertex v renamed to perm[v]; perm must keep the layout valid.
inline evenpan::Digraph relabel(const evenpan::Digraph& g, const std::vector<int>& perm) {
  auto h = g.is_bipartite() ? evenpan::Digraph::bipartite(g.side_size())
                            : evenpan::Digraph::general(g.order());
  for (const auto& [u, v] : g.arcs()) h.add_arc(perm[u], perm[v]);
  return h;
}

/// Bipartite or general random digraph of small order, alternating layouts.
inline evenpan::Digraph random_small(std::uint64_t seed, int max_order) {
  const std::uint64_t r = evenpan::mix_seed(seed, 7);
  const double p = 0.15 + 0.7 * static_cast<double>(r % 1000) / 1000.0;
  if (r & 1) {
    const int a = 1 + static_cast<int>((r >> 10) % static_cast<std::uint64_t>(max_order / 2));
    return evenpan::random_bipartite(a, p, seed);
  }
  const int n = 2 + static_cast<int>((r >> 10) % static_cast<std::uint64_t>(max_order - 1));
  return evenpan::random_general(n, p, seed);
}

inline oracle::Seq seq(const std::vector<evenpan::Vertex>& vs) {
  return oracle::Seq(vs.begin(), vs.end());
}

}  // namespace testing
