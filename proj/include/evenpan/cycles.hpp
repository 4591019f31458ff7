#pragma once

#include <map>
#include <optional>
#include <vector>

#include "evenpan/digraph.hpp"
#include "evenpan/witness.hpp"

namespace evenpan {

/// Largest order for which the engine certifies absence of cycles
/// (spectrum, longest non-Hamiltonian cycle). Larger inputs are refused
/// with TooLarge instead of returning an uncertified answer.
struct EngineLimits {
  int max_order = 24;
};

/// Cycle lengths present in a digraph, one canonical witness per length.
/// A length missing from `achievable` has no cycle at all.
struct CycleSpectrum {
  int order = 0;
  std::map<int, Cycle> achievable;

  bool has(int length) const { return achievable.contains(length); }
  std::vector<int> lengths() const;
};

/// A C-bypass: an (u, v)-path with at least one interior vertex, u != v on
/// C, interior off C. `gap` is the length of C[u, v] following C's arcs.
struct Bypass {
  Path path;
  Cycle host_cycle;
  int gap = 0;

  Vertex entry() const { return path.vertices.front(); }
  Vertex exit() const { return path.vertices.back(); }
};

/// Smallest cycle of exactly m vertices under canonical vertex order
/// (rotation starting at its minimum vertex, then lexicographic).
/// Throws BadLength unless 2 <= m <= order.
std::optional<Cycle> find_cycle_of_length(const Digraph& g, int m);

/// Canonical witnesses for every length in `lengths` that occurs; lengths
/// outside [2, order] are ignored.
std::map<int, Cycle> find_cycles_of_lengths(const Digraph& g, const std::vector<int>& lengths);

/// Every achievable length (even lengths only on bipartite layouts).
/// Throws TooLarge above limits.max_order.
CycleSpectrum cycle_spectrum(const Digraph& g, const EngineLimits& limits = {});

std::optional<Cycle> find_hamiltonian_cycle(const Digraph& g);

/// A longest cycle of length strictly below the order; absent when every
/// cycle is Hamiltonian or none exists. Throws TooLarge above the limit.
std::optional<Cycle> longest_non_hamiltonian_cycle(const Digraph& g,
                                                   const EngineLimits& limits = {});

/// Bypass of minimum gap, ties broken by entry vertex then by the path's
/// vertex sequence. Throws InvalidCycle if `c` is not a cycle of `g` or
/// covers every vertex.
std::optional<Bypass> find_bypass(const Digraph& g, const Cycle& c);

/// Every C-bypass, in (gap, entry, path) order. Exponential; intended for
/// small instances and tests.
std::vector<Bypass> all_bypasses(const Digraph& g, const Cycle& c);

/// For a cycle C of length 2b in a bipartite digraph and an off-cycle
/// vertex x with d(x, V(C)) >= b + 1: a cycle through x of each even length
/// 2..2b, searched inside V(C) + x. A length missing from the result means
/// no such cycle exists in that vertex set.
///
/// Throws InvalidCycle (bad or odd cycle), PreconditionUnmet (non-bipartite
/// host, x on C, or the degree bound fails).
std::map<int, Cycle> cycles_through_vertex(const Digraph& g, const Cycle& c, Vertex x);

}  // namespace evenpan
