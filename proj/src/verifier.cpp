#include "evenpan/verifier.hpp"

#include <algorithm>

#include "evenpan/cycles.hpp"
#include "evenpan/families.hpp"

namespace evenpan {

const Digraph& d8() {
  static const Digraph g = generate(FamilySpec{Family::D8});
  return g;
}

namespace {

std::vector<std::pair<int, int>> degree_multiset(const Digraph& g) {
  std::vector<std::pair<int, int>> result;
  for (Vertex v = 0; v < g.order(); ++v) result.emplace_back(count(g.out(v)), count(g.in(v)));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

bool is_isomorphism_to_D8(const Digraph& g, const IsomorphismWitness& w) {
  if (!g.is_bipartite() || g.order() != 8) return false;
  const Digraph& target = d8();
  std::array<bool, 8> hit{};
  for (Vertex v = 0; v < 8; ++v) {
    const Vertex image = w.mapping[v];
    if (image < 0 || image >= 8 || hit[image]) return false;
    hit[image] = true;
    const bool same_side = g.side_of(v) == target.side_of(image);
    if (same_side == w.side_swap) return false;
  }
  if (g.arc_count() != target.arc_count()) return false;
  for (const auto& [tail, head] : g.arcs())
    if (!target.has_arc(w.mapping[tail], w.mapping[head])) return false;
  return true;
}

std::optional<IsomorphismWitness> iso_to_D8(const Digraph& g) {
  const Digraph& target = d8();
  if (!g.is_bipartite() || g.order() != 8) return std::nullopt;
  if (g.arc_count() != target.arc_count()) return std::nullopt;
  static const auto target_degrees = degree_multiset(target);
  if (degree_multiset(g) != target_degrees) return std::nullopt;

  const auto arcs = g.arcs();
  for (const bool swap : {false, true}) {
    std::array<int, 4> px{0, 1, 2, 3};
    do {
      std::array<int, 4> py{0, 1, 2, 3};
      do {
        IsomorphismWitness w;
        w.side_swap = swap;
        for (int i = 0; i < 4; ++i) {
          w.mapping[i] = swap ? 4 + px[i] : px[i];
          w.mapping[4 + i] = swap ? py[i] : 4 + py[i];
        }
        const bool ok = std::all_of(arcs.begin(), arcs.end(), [&](const auto& arc) {
          return target.has_arc(w.mapping[arc.first], w.mapping[arc.second]);
        });
        if (ok) return w;
      } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
  }
  return std::nullopt;
}

Outcome TheoremVerdict::outcome() const {
  if (std::holds_alternative<std::monostate>(conclusion)) return Outcome::HypothesesNotMet;
  if (std::holds_alternative<Violation>(conclusion)) return Outcome::Violation;
  return Outcome::Confirmed;
}

namespace {

std::vector<int> even_lengths_up_to(int top) {
  std::vector<int> lengths;
  for (int m = 2; m <= top; m += 2) lengths.push_back(m);
  return lengths;
}

std::string missing_lengths(const std::map<int, Cycle>& found, const std::vector<int>& wanted) {
  std::string out;
  for (int m : wanted) {
    if (found.contains(m)) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(m);
  }
  return out;
}

}  // namespace

TheoremVerdict verify_theorem_1_8(const Digraph& g) {
  TheoremVerdict verdict{Theorem::T1_8, check_theorem_hypotheses(g, Theorem::T1_8), {}};
  if (!verdict.hypotheses.satisfied) return verdict;
  if (is_directed_cycle(g)) {
    verdict.conclusion = DirectedCycleWitness{*find_cycle_of_length(g, g.order())};
  } else if (auto c = find_cycle_of_length(g, g.order() - 2)) {
    verdict.conclusion = TwoAMinus2Cycle{std::move(*c)};
  } else {
    verdict.conclusion =
        Violation{"cycle of length 2a-2 or directed cycle",
                  "no cycle of length " + std::to_string(g.order() - 2) +
                      " and the digraph is not a directed cycle"};
  }
  return verdict;
}

TheoremVerdict verify_theorem_1_9(const Digraph& g) {
  TheoremVerdict verdict{Theorem::T1_9, check_theorem_hypotheses(g, Theorem::T1_9), {}};
  if (!verdict.hypotheses.satisfied) return verdict;
  const auto wanted = even_lengths_up_to(g.order() - 2);
  auto found = find_cycles_of_lengths(g, wanted);
  if (found.size() == wanted.size()) {
    verdict.conclusion = PancyclicCertificate{std::move(found)};
  } else {
    verdict.conclusion = Violation{"cycles of every even length 2..2a-2",
                                   "missing lengths " + missing_lengths(found, wanted)};
  }
  return verdict;
}

TheoremVerdict verify_theorem_1_10(const Digraph& g) {
  TheoremVerdict verdict{Theorem::T1_10, check_theorem_hypotheses(g, Theorem::T1_10), {}};
  if (!verdict.hypotheses.satisfied) return verdict;
  const auto wanted = even_lengths_up_to(g.order());
  auto found = find_cycles_of_lengths(g, wanted);
  if (found.size() == wanted.size()) {
    verdict.conclusion = PancyclicCertificate{std::move(found)};
  } else if (auto w = iso_to_D8(g)) {
    verdict.conclusion = D8Isomorphism{*w};
  } else {
    verdict.conclusion = Violation{"cycles of every even length 2..2a or isomorphic to D(8)",
                                   "missing lengths " + missing_lengths(found, wanted)};
  }
  return verdict;
}

TheoremVerdict verify_theorem(const Digraph& g, Theorem theorem) {
  switch (theorem) {
    case Theorem::T1_8: return verify_theorem_1_8(g);
    case Theorem::T1_9: return verify_theorem_1_9(g);
    case Theorem::T1_10: return verify_theorem_1_10(g);
    default:
      throw GraphError(ErrorCode::BadParams,
                       "no verdict procedure for theorem " + std::string(to_string(theorem)));
  }
}

std::optional<std::string> audit(const Digraph& g, const TheoremVerdict& verdict) {
  auto check_lengths = [&](const std::map<int, Cycle>& cycles) -> std::optional<std::string> {
    for (const auto& [length, c] : cycles) {
      if (c.length() != length) return "certificate for length " + std::to_string(length) +
                                       " has " + std::to_string(c.length()) + " vertices";
      if (auto defect = check_cycle(g, c)) return defect;
    }
    return std::nullopt;
  };
  return std::visit(
      [&](const auto& c) -> std::optional<std::string> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PancyclicCertificate>) {
          return check_lengths(c.cycles);
        } else if constexpr (std::is_same_v<T, DirectedCycleWitness>) {
          if (!is_directed_cycle(g)) return "not a directed cycle";
          if (c.cycle.length() != g.order()) return "witness is not Hamiltonian";
          return check_cycle(g, c.cycle);
        } else if constexpr (std::is_same_v<T, TwoAMinus2Cycle>) {
          if (c.cycle.length() != g.order() - 2) return "witness has wrong length";
          return check_cycle(g, c.cycle);
        } else if constexpr (std::is_same_v<T, D8Isomorphism>) {
          if (!is_isomorphism_to_D8(g, c.witness)) return "bijection is not an isomorphism";
          return std::nullopt;
        } else {
          return std::nullopt;
        }
      },
      verdict.conclusion);
}

std::string to_text(const Digraph& g, const IsomorphismWitness& w) {
  std::string out = std::string("side_swap=") + (w.side_swap ? "true" : "false") + "\n";
  out += "mapping=";
  for (Vertex v = 0; v < 8; ++v) {
    if (v) out += ' ';
    out += g.name(v) + "->" + d8().name(w.mapping[v]);
  }
  return out + "\n";
}

std::string to_text(const Digraph& g, const TheoremVerdict& verdict) {
  std::string out = to_text(verdict.hypotheses);
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out += "conclusion=none\n";
        } else if constexpr (std::is_same_v<T, PancyclicCertificate>) {
          out += "conclusion=pancyclic\n";
          for (const auto& [length, cycle] : c.cycles)
            out += "cycle " + std::to_string(length) + ": " + to_text(g, cycle) + "\n";
        } else if constexpr (std::is_same_v<T, DirectedCycleWitness>) {
          out += "conclusion=directed_cycle\n";
          out += "cycle " + std::to_string(c.cycle.length()) + ": " + to_text(g, c.cycle) + "\n";
        } else if constexpr (std::is_same_v<T, TwoAMinus2Cycle>) {
          out += "conclusion=cycle_2a_minus_2\n";
          out += "cycle " + std::to_string(c.cycle.length()) + ": " + to_text(g, c.cycle) + "\n";
        } else if constexpr (std::is_same_v<T, D8Isomorphism>) {
          out += "conclusion=isomorphic_to_d8\n";
          out += to_text(g, c.witness);
        } else {
          out += "conclusion=violation\n";
          out += "claim=" + c.claim + "\n";
          out += "details=" + c.details + "\n";
        }
      },
      verdict.conclusion);
  return out;
}

}  // namespace evenpan
