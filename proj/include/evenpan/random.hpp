#pragma once

#include <cstdint>

#include "evenpan/digraph.hpp"

namespace evenpan {

/// Each of the 2a^2 cross-side arcs is included independently with
/// probability p, decided in canonical arc order from a std::mt19937_64
/// stream. The mapping from draw to decision avoids the standard
/// distributions, so results are identical on every platform.
BipartiteDigraph random_bipartite(int a, double p, std::uint64_t seed);

/// Same sampling model over the n(n-1) ordered pairs of a general digraph.
Digraph random_general(int n, double p, std::uint64_t seed);

/// Stateless 64-bit mixer used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace evenpan
