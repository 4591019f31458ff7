#include "evenpan/random.hpp"

#include <random>

namespace evenpan {

namespace {

// Top 53 bits of the draw as a double in [0, 1).
bool include_arc(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw GraphError(ErrorCode::BadParams, "arc probability must lie in [0, 1]");
}

}  // namespace

BipartiteDigraph random_bipartite(int a, double p, std::uint64_t seed) {
  check_probability(p);
  BipartiteDigraph g(a);
  std::mt19937_64 rng(seed);
  const Digraph& view = g;
  for (Vertex u = 0; u < view.order(); ++u) {
    const VertexSet heads = view.side_set(view.side_of(u) == Side::X ? Side::Y : Side::X);
    for (VertexSet s = heads; s; s &= s - 1)
      if (include_arc(rng, p)) g.add_arc(u, lowest(s));
  }
  return g;
}

Digraph random_general(int n, double p, std::uint64_t seed) {
  check_probability(p);
  Digraph g = Digraph::general(n);
  std::mt19937_64 rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && include_arc(rng, p)) g.add_arc(u, v);
  return g;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over the combined input.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace evenpan
