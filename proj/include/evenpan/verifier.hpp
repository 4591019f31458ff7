#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "evenpan/conditions.hpp"
#include "evenpan/digraph.hpp"
#include "evenpan/witness.hpp"

namespace evenpan {

/// Vertex bijection D -> D(8). mapping[v] is the image of dense vertex v.
/// With side_swap the X side of D goes to Y of D(8) and vice versa.
struct IsomorphismWitness {
  std::array<Vertex, 8> mapping{};
  bool side_swap = false;

  friend bool operator==(const IsomorphismWitness&, const IsomorphismWitness&) = default;
};

const Digraph& d8();

/// Exhaustive search over the 2 * 4! * 4! side-respecting bijections (with
/// and without side swap), first hit in lexicographic order. Rejects early
/// on order, arc count or degree multiset.
std::optional<IsomorphismWitness> iso_to_D8(const Digraph& g);

/// True when `w` maps the arcs of `g` exactly onto the arcs of D(8).
bool is_isomorphism_to_D8(const Digraph& g, const IsomorphismWitness& w);

struct PancyclicCertificate {
  std::map<int, Cycle> cycles;
};
struct DirectedCycleWitness {
  Cycle cycle;
};
struct D8Isomorphism {
  IsomorphismWitness witness;
};
struct TwoAMinus2Cycle {
  Cycle cycle;
};
struct Violation {
  std::string claim;
  std::string details;
};

/// std::monostate means the hypotheses were not met and nothing is claimed.
using Conclusion = std::variant<std::monostate, PancyclicCertificate, DirectedCycleWitness,
                                D8Isomorphism, TwoAMinus2Cycle, Violation>;

enum class Outcome { HypothesesNotMet, Confirmed, Violation };

struct TheoremVerdict {
  Theorem theorem = Theorem::T1_8;
  HypothesisReport hypotheses;
  Conclusion conclusion;

  Outcome outcome() const;
};

// Each verifier evaluates the hypotheses itself and claims a conclusion
// only when they hold. A Violation is a counterexample to the theorem.

/// Cycle of length 2a-2, or the digraph is a directed cycle.
TheoremVerdict verify_theorem_1_8(const Digraph& g);
/// Cycles of every even length 2..2a-2.
TheoremVerdict verify_theorem_1_9(const Digraph& g);
/// Cycles of every even length 2..2a, or isomorphic to D(8).
TheoremVerdict verify_theorem_1_10(const Digraph& g);
TheoremVerdict verify_theorem(const Digraph& g, Theorem theorem);

/// Checks every witness inside the verdict against `g`; returns a defect
/// description or std::nullopt.
std::optional<std::string> audit(const Digraph& g, const TheoremVerdict& verdict);

std::string to_text(const Digraph& g, const IsomorphismWitness& w);
std::string to_text(const Digraph& g, const TheoremVerdict& verdict);

}  // namespace evenpan
