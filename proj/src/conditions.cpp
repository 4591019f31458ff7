#include "evenpan/conditions.hpp"

#include <algorithm>

#include "evenpan/cycles.hpp"

namespace evenpan {

ConditionReport check_Bk(const BipartiteDigraph& bg, int k) {
  const Digraph& g = bg;
  ConditionReport report;
  report.k = k;
  report.threshold = 2 * g.side_size() - 2 + k;
  for (const auto& pair : dominating_pairs(g)) {
    ++report.pairs_checked;
    const int m = std::max(total_degree(g, pair.u), total_degree(g, pair.v));
    if (m < report.threshold) report.holds = false;
    // Pairs arrive in lexicographic order, so strict < keeps the first.
    if (!report.worst_pair || m < report.worst_pair->max_degree)
      report.worst_pair = WorstPair{pair, m};
  }
  return report;
}

bool satisfies_two_sided_condition(const BipartiteDigraph& bg) {
  const Digraph& g = bg;
  const int a = g.side_size();
  for (const auto& pair : dominating_pairs(g)) {
    const int du = total_degree(g, pair.u);
    const int dv = total_degree(g, pair.v);
    const bool ok = (du >= 2 * a - 1 && dv >= a + 1) || (dv >= 2 * a - 1 && du >= a + 1);
    if (!ok) return false;
  }
  return true;
}

bool is_directed_cycle(const Digraph& g) {
  if (g.order() < 2) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (count(g.out(v)) != 1 || count(g.in(v)) != 1) return false;
  return is_strong(g);
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T1_6: return "1.6";
    case Theorem::T1_7: return "1.7";
    case Theorem::T1_8: return "1.8";
    case Theorem::T1_9: return "1.9";
    case Theorem::T1_10: return "1.10";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view text) {
  if (text.starts_with('T') || text.starts_with('t')) text.remove_prefix(1);
  for (Theorem t : {Theorem::T1_6, Theorem::T1_7, Theorem::T1_8, Theorem::T1_9, Theorem::T1_10})
    if (text == to_string(t)) return t;
  return std::nullopt;
}

namespace {

constexpr std::string_view kBipartite = "balanced bipartite";
constexpr std::string_view kStrong = "strongly connected";

void require_bk(const Digraph& g, int k, HypothesisReport& report) {
  const std::string name = "condition B_" + std::to_string(k);
  const auto bg = BipartiteDigraph::from(g);
  if (!bg) {
    report.failures.push_back({name, "undefined on a non-bipartite digraph"});
    return;
  }
  const auto bk = check_Bk(*bg, k);
  if (!bk.holds) {
    const auto& w = *bk.worst_pair;
    report.failures.push_back(
        {name, "pair {" + g.name(w.pair.u) + ", " + g.name(w.pair.v) + "} has max degree " +
                   std::to_string(w.max_degree) + " < " + std::to_string(bk.threshold)});
  }
}

void require_order_at_least_8(const Digraph& g, HypothesisReport& report) {
  if (g.order() < 8)
    report.failures.push_back({"order 2a >= 8", "order is " + std::to_string(g.order())});
}

}  // namespace

HypothesisReport check_theorem_hypotheses(const Digraph& g, Theorem theorem) {
  HypothesisReport report;
  report.theorem = theorem;
  if (!g.is_bipartite()) report.failures.push_back({std::string(kBipartite), "general layout"});
  if (!is_strong(g)) report.failures.push_back({std::string(kStrong), ""});

  switch (theorem) {
    case Theorem::T1_6:
      if (const auto bg = BipartiteDigraph::from(g)) {
        if (!satisfies_two_sided_condition(*bg))
          report.failures.push_back({"two-sided degree condition", ""});
      } else {
        report.failures.push_back(
            {"two-sided degree condition", "undefined on a non-bipartite digraph"});
      }
      break;
    case Theorem::T1_7:
    case Theorem::T1_8:
      require_order_at_least_8(g, report);
      require_bk(g, 1, report);
      break;
    case Theorem::T1_9: {
      require_order_at_least_8(g, report);
      require_bk(g, 0, report);
      const int target = g.order() - 2;
      if (g.is_bipartite() && (target < 2 || !find_cycle_of_length(g, target)))
        report.failures.push_back({"cycle of length 2a-2", ""});
      break;
    }
    case Theorem::T1_10:
      require_order_at_least_8(g, report);
      if (is_directed_cycle(g)) report.failures.push_back({"not a directed cycle", ""});
      require_bk(g, 1, report);
      break;
  }
  report.satisfied = report.failures.empty();
  return report;
}

std::string to_text(const Digraph& g, const ConditionReport& report) {
  std::string out;
  out += "k=" + std::to_string(report.k) + "\n";
  out += "threshold=" + std::to_string(report.threshold) + "\n";
  out += std::string("holds=") + (report.holds ? "true" : "false") + "\n";
  out += "pairs_checked=" + std::to_string(report.pairs_checked) + "\n";
  if (report.worst_pair) {
    const auto& w = *report.worst_pair;
    out += "worst_pair=" + g.name(w.pair.u) + " " + g.name(w.pair.v) + " witness=" +
           g.name(w.pair.witness) + " max_degree=" + std::to_string(w.max_degree) + "\n";
  } else {
    out += "worst_pair=none\n";
  }
  return out;
}

std::string to_text(const HypothesisReport& report) {
  std::string out;
  out += "theorem=" + std::string(to_string(report.theorem)) + "\n";
  out += std::string("hypotheses=") + (report.satisfied ? "satisfied" : "not_met") + "\n";
  for (const auto& f : report.failures) {
    out += "failure=" + f.predicate;
    if (!f.detail.empty()) out += " (" + f.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace evenpan
