#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenpan/digraph.hpp"

namespace evenpan {

/// Claims the randomized harness can test. Theorems are checked through
/// their verdict procedures; lemmas through instance checks.
enum class Claim {
  T1_8,
  T1_9,
  T1_10,
  L3_1,  // UG(D) 2-connected and a C-bypass for every cycle up to 2a-2
  L3_2,  // a non-Hamiltonian cycle of length >= 4
  L3_3,  // cycles of every even length through a high-degree off-cycle vertex
  L3_4,  // a gap-1 bypass of a longest non-Hamiltonian cycle forces length 2a-2
};

std::string_view to_string(Claim c);
/// Accepts "1.8", "1.9", "1.10", "3.1" .. "3.4".
std::optional<Claim> parse_claim(std::string_view text);

/// Result of checking one claim on one digraph. `qualifying` counts
/// instances meeting the claim's hypotheses (for Lemma 3.3, qualifying
/// (D, C, x) triples); `violation` describes a failed conclusion.
struct InstanceReport {
  std::uint64_t qualifying = 0;
  std::vector<std::string> counters;
  std::optional<std::string> violation;
};

InstanceReport check_instance(const BipartiteDigraph& g, Claim claim);

struct SearchConfig {
  Claim claim = Claim::T1_10;
  int a_min = 4;
  int a_max = 6;
  std::vector<double> p_values{0.3, 0.5, 0.7};
  std::uint64_t samples_per_cell = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// When set, every violation is written there as a parseable digraph file.
  std::optional<std::filesystem::path> violation_dir;
};

struct ViolationRecord {
  int a = 0;
  double p = 0.0;
  std::uint64_t sample_index = 0;
  std::uint64_t sample_seed = 0;
  std::string details;
  std::string digraph;  // canonical serialization
};

/// Counts for one (a, p) cell.
struct CellReport {
  int a = 0;
  double p = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t qualifying = 0;
  std::map<std::string, std::uint64_t> counters;
};

struct SearchReport {
  SearchConfig config;
  std::vector<CellReport> cells;
  std::vector<ViolationRecord> violations;
  double seconds = 0.0;

  std::uint64_t total_samples() const;
  std::uint64_t total_qualifying() const;
  std::uint64_t counter(std::string_view name) const;
};

/// Seed used for sample `index` of cell (a, p_values[p_index]).
std::uint64_t sample_seed(std::uint64_t seed, int a, std::size_t p_index, std::uint64_t index);

/// Samples seeded digraphs, keeps those meeting the claim's hypotheses and
/// checks the claim on them. Identical configs give identical reports
/// (apart from `seconds`) for any worker count. Throws BadConfig.
SearchReport search_counterexamples(const SearchConfig& config);

/// Stable key-value rendering; excludes the runtime.
std::string to_text(const SearchReport& report);

/// Shell command that regenerates a violating sample and re-checks it.
std::string reproduction_command(const SearchConfig& config, const ViolationRecord& v);

/// Exhaustive sweep over a slice of the sample space: every bipartite
/// digraph containing all arcs of `fixed`, plus any subset of the cross-side
/// arcs `fixed` lacks. Members with a vertex of total degree below
/// `min_degree` are skipped before the claim is checked.
struct SliceConfig {
  Claim claim = Claim::T1_10;
  BipartiteDigraph fixed{4};
  int min_degree = 0;
  unsigned workers = 1;
  std::optional<std::filesystem::path> violation_dir;
};

inline constexpr int kMaxFreeArcs = 28;

struct SliceReport {
  SliceConfig config;
  int free_arcs = 0;
  std::uint64_t members = 0;   // 2^free_arcs
  std::uint64_t evaluated = 0; // members passing the degree filter
  std::uint64_t qualifying = 0;
  std::map<std::string, std::uint64_t> counters;
  /// sample_index holds the subset mask over the free arcs in canonical order.
  std::vector<ViolationRecord> violations;
  double seconds = 0.0;
};

/// Throws BadConfig when more than kMaxFreeArcs arcs are free.
SliceReport sweep_slice(const SliceConfig& config);

std::string to_text(const SliceReport& report);

}  // namespace evenpan
