#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenpan/digraph.hpp"

namespace evenpan {

enum class Family {
  D8,
  D6,
  D6Prime,
  DirectedCycle,      // param a: x0 y0 x1 y1 ... y{a-1} x0
  Hmm,                // param m: H(m, m)
  Hm_m1_1,            // param m: H(m, m-1, 1)
  H2m,                // param m: H(2m)
  CompleteBipartite,  // param a
};

/// A family and the parameters selecting one member.
///
/// Canonical members (the definitions admit many digraphs):
///  - H(m,m): vertices A = v0..v{m-1}, B = v{m}..v{2m-1}; <A>, <B> complete;
///    A -> B arcs form the matching v{i} -> v{m+i}.
///  - H(m,m-1,1): A = v0..v{m-1} (independent), B = v{m}..v{2m-2},
///    a = v{2m-1}; <B + a> complete; all arcs between A and B. Default
///    orientation N^-(a) = B with a -> A; `alternate` selects N^+(a) = B
///    with A -> a.
///  - H(2m): A = v0..v{m-2}, x = v{m-1}, B = v{m}..v{2m-2}, y = v{2m-1};
///    <A + x>, <B + y> complete; y -> A, B -> x, and x -> y. `alternate`
///    adds y -> x as well.
///  - D6: x1..x5 are v0..v4 and the distinguished vertex x is v5.
struct FamilySpec {
  Family family = Family::D8;
  int param = 0;
  bool alternate = false;
};

std::string to_string(const FamilySpec& spec);
/// Family names: d8, d6, d6prime, cycle, hmm, hm-m1-1, h2m, complete.
std::optional<Family> parse_family(std::string_view name);

/// Throws BadParams when the parameter is out of range.
Digraph generate(const FamilySpec& spec);

struct FamilyProperty {
  enum class Kind {
    Strong,
    SatisfiesB1,
    Hamiltonian,
    NotHamiltonian,
    HasCycleOfLength,
    SpectrumEquals,
    DirectedCycle,
    HmmStructure,
    Hm_m1_1Structure,
    H2mStructure,
  };

  Kind kind;
  std::vector<int> values;  // lengths or family parameters, per kind
  bool alternate = false;

  std::string describe() const;
};

/// Checkable expectations recorded for each family.
std::vector<FamilyProperty> family_properties(const FamilySpec& spec);

/// Re-evaluates one expectation against `g` from scratch.
bool replay(const Digraph& g, const FamilyProperty& property);

// Membership predicates that restate the set definitions verbatim, under
// the vertex naming documented on FamilySpec. Any member of the family
// passes, not only the canonical one.
bool in_Hmm(const Digraph& g, int m);
bool in_Hm_m1_1(const Digraph& g, int m);
bool in_H2m(const Digraph& g, int m);

}  // namespace evenpan
