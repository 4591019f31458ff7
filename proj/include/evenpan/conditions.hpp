#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenpan/digraph.hpp"

namespace evenpan {

struct WorstPair {
  DominatingPair pair;
  int max_degree = 0;
};

/// Outcome of condition B_k: every dominating pair {u, v} has
/// max{d(u), d(v)} >= 2a - 2 + k.
struct ConditionReport {
  int k = 0;
  int threshold = 0;  // 2a - 2 + k
  bool holds = true;
  std::size_t pairs_checked = 0;
  /// Pair minimising max{d(u), d(v)}; lexicographically smallest on ties.
  std::optional<WorstPair> worst_pair;
};

ConditionReport check_Bk(const BipartiteDigraph& g, int k);

/// Two-sided condition: for every dominating pair, one member has degree
/// at least 2a - 1 and the other at least a + 1.
bool satisfies_two_sided_condition(const BipartiteDigraph& g);

/// Strong digraph in which every vertex has in- and out-degree exactly one,
/// i.e. a single directed cycle through all vertices.
bool is_directed_cycle(const Digraph& g);

enum class Theorem { T1_6, T1_7, T1_8, T1_9, T1_10 };

std::string_view to_string(Theorem t);
/// Accepts "1.6" .. "1.10" (optionally prefixed with "T").
std::optional<Theorem> parse_theorem(std::string_view text);

struct PredicateFailure {
  std::string predicate;
  std::string detail;
};

struct HypothesisReport {
  Theorem theorem = Theorem::T1_8;
  bool satisfied = false;
  std::vector<PredicateFailure> failures;
};

/// Evaluates every hypothesis clause of `theorem` independently and lists
/// all that fail.
HypothesisReport check_theorem_hypotheses(const Digraph& g, Theorem theorem);

/// Line-oriented rendering: one `key=value` field per line.
std::string to_text(const Digraph& g, const ConditionReport& report);
std::string to_text(const HypothesisReport& report);

}  // namespace evenpan
