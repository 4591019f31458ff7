#include "evenpan/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <thread>

#include "evenpan/conditions.hpp"
#include "evenpan/cycles.hpp"
#include "evenpan/random.hpp"
#include "evenpan/text_format.hpp"
#include "evenpan/verifier.hpp"

namespace evenpan {

namespace {

struct ClaimName {
  Claim claim;
  std::string_view name;
};

constexpr ClaimName kClaims[] = {
    {Claim::T1_8, "1.8"},  {Claim::T1_9, "1.9"},  {Claim::T1_10, "1.10"}, {Claim::L3_1, "3.1"},
    {Claim::L3_2, "3.2"},  {Claim::L3_3, "3.3"},  {Claim::L3_4, "3.4"},
};

std::string format_double(double value, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

std::string_view to_string(Claim c) {
  for (const auto& entry : kClaims)
    if (entry.claim == c) return entry.name;
  return "?";
}

std::optional<Claim> parse_claim(std::string_view text) {
  if (text.starts_with('T') || text.starts_with('L') || text.starts_with('t') ||
      text.starts_with('l'))
    text.remove_prefix(1);
  for (const auto& entry : kClaims)
    if (entry.name == text) return entry.claim;
  return std::nullopt;
}

std::uint64_t SearchReport::total_samples() const {
  std::uint64_t total = 0;
  for (const auto& c : cells) total += c.samples;
  return total;
}

std::uint64_t SearchReport::total_qualifying() const {
  std::uint64_t total = 0;
  for (const auto& c : cells) total += c.qualifying;
  return total;
}

std::uint64_t SearchReport::counter(std::string_view name) const {
  std::uint64_t total = 0;
  for (const auto& c : cells) {
    auto it = c.counters.find(std::string(name));
    if (it != c.counters.end()) total += it->second;
  }
  return total;
}

std::uint64_t sample_seed(std::uint64_t seed, int a, std::size_t p_index, std::uint64_t index) {
  const std::uint64_t cell = (static_cast<std::uint64_t>(a) << 16) | p_index;
  return mix_seed(mix_seed(seed, cell), index);
}

namespace {

bool strong_with_Bk(const BipartiteDigraph& g, int k) {
  const Digraph& d = g;
  return d.order() >= 8 && is_strong(d) && check_Bk(g, k).holds;
}

InstanceReport check_theorem(const BipartiteDigraph& bg, Theorem theorem, int k) {
  InstanceReport result;
  // Cheap necessary clauses first; the verdict re-evaluates all of them.
  if (!strong_with_Bk(bg, k)) return result;
  const Digraph& g = bg;
  const auto verdict = verify_theorem(g, theorem);
  switch (verdict.outcome()) {
    case Outcome::HypothesesNotMet:
      return result;
    case Outcome::Violation:
      result.qualifying = 1;
      result.violation = std::get<Violation>(verdict.conclusion).details;
      return result;
    case Outcome::Confirmed:
      break;
  }
  result.qualifying = 1;
  if (auto defect = audit(g, verdict)) {
    result.violation = "unsound certificate: " + *defect;
    return result;
  }
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PancyclicCertificate>) result.counters.push_back("pancyclic");
        if constexpr (std::is_same_v<T, DirectedCycleWitness>)
          result.counters.push_back("directed_cycle");
        if constexpr (std::is_same_v<T, TwoAMinus2Cycle>)
          result.counters.push_back("cycle_2a_minus_2");
        if constexpr (std::is_same_v<T, D8Isomorphism>) result.counters.push_back("d8_isomorphic");
      },
      verdict.conclusion);
  return result;
}

InstanceReport check_lemma_3_1(const BipartiteDigraph& bg) {
  InstanceReport result;
  if (!strong_with_Bk(bg, 1)) return result;
  const Digraph& g = bg;
  result.qualifying = 1;
  if (!underlying_two_connected(g)) {
    result.violation = "UG(D) is not 2-connected";
    return result;
  }
  std::vector<int> lengths;
  for (int m = 2; m <= g.order() - 2; m += 2) lengths.push_back(m);
  for (const auto& [length, c] : find_cycles_of_lengths(g, lengths)) {
    result.counters.push_back("cycles_checked");
    if (!find_bypass(g, c)) {
      result.violation = "no C-bypass for cycle " + to_text(g, c);
      return result;
    }
  }
  return result;
}

InstanceReport check_lemma_3_2(const BipartiteDigraph& bg) {
  InstanceReport result;
  const Digraph& g = bg;
  if (!strong_with_Bk(bg, 0) || is_directed_cycle(g)) return result;
  result.qualifying = 1;
  for (int m = g.order() - 2; m >= 4; m -= 2)
    if (find_cycle_of_length(g, m)) return result;
  result.violation = "no non-Hamiltonian cycle of length >= 4";
  return result;
}

InstanceReport check_lemma_3_3(const BipartiteDigraph& bg) {
  InstanceReport result;
  const Digraph& g = bg;
  std::vector<int> lengths;
  for (int m = 2; m <= g.order() - 1; m += 2) lengths.push_back(m);
  for (const auto& [length, c] : find_cycles_of_lengths(g, lengths)) {
    const int b = length / 2;
    const VertexSet on_cycle = c.vertex_set();
    for (VertexSet off = g.vertices() & ~on_cycle; off; off &= off - 1) {
      const Vertex x = lowest(off);
      if (restricted_degree(g, x, on_cycle) < b + 1) continue;
      ++result.qualifying;
      const auto through = cycles_through_vertex(g, c, x);
      for (int m = 2; m <= 2 * b; m += 2) {
        const auto it = through.find(m);
        if (it == through.end() || !is_valid_cycle(g, it->second) || !it->second.contains(x) ||
            it->second.length() != m) {
          result.violation = "C = " + to_text(g, c) + ", x = " + g.name(x) +
                             ": no cycle of length " + std::to_string(m) + " through x";
          return result;
        }
      }
    }
  }
  return result;
}

InstanceReport check_lemma_3_4(const BipartiteDigraph& bg) {
  InstanceReport result;
  if (!strong_with_Bk(bg, 0)) return result;
  const Digraph& g = bg;
  const auto c = longest_non_hamiltonian_cycle(g);
  if (!c || c->length() < 4) return result;
  result.qualifying = 1;
  const auto bypass = find_bypass(g, *c);
  if (bypass && bypass->gap == 1) {
    result.counters.push_back("gap_one_bypass");
    if (c->length() != g.order() - 2)
      result.violation = "longest non-Hamiltonian cycle " + to_text(g, *c) +
                         " has a gap-1 bypass " + to_text(g, bypass->path) + " but length " +
                         std::to_string(c->length()) + " != 2a-2";
  }
  return result;
}

}  // namespace

InstanceReport check_instance(const BipartiteDigraph& g, Claim claim) {
  switch (claim) {
    case Claim::T1_8: return check_theorem(g, Theorem::T1_8, 1);
    case Claim::T1_9: return check_theorem(g, Theorem::T1_9, 0);
    case Claim::T1_10: return check_theorem(g, Theorem::T1_10, 1);
    case Claim::L3_1: return check_lemma_3_1(g);
    case Claim::L3_2: return check_lemma_3_2(g);
    case Claim::L3_3: return check_lemma_3_3(g);
    case Claim::L3_4: return check_lemma_3_4(g);
  }
  return {};
}

namespace {

void validate(const SearchConfig& config) {
  auto fail = [](const std::string& what) { return GraphError(ErrorCode::BadConfig, what); };
  if (config.a_min < 1 || config.a_max < config.a_min) throw fail("need 1 <= a_min <= a_max");
  if (2 * config.a_max > EngineLimits{}.max_order)
    throw fail("a_max exceeds the desk-scale bound (order " +
               std::to_string(EngineLimits{}.max_order) + ")");
  if (config.p_values.empty()) throw fail("no arc probabilities given");
  for (double p : config.p_values)
    if (!(p >= 0.0 && p <= 1.0)) throw fail("arc probability outside [0, 1]");
  if (config.workers == 0) throw fail("workers must be positive");
}

void persist(const SearchConfig& config, const ViolationRecord& v) {
  std::filesystem::create_directories(*config.violation_dir);
  const auto file = *config.violation_dir / ("violation-" + std::string(to_string(config.claim)) +
                                             "-a" + std::to_string(v.a) + "-seed" +
                                             std::to_string(v.sample_seed) + ".txt");
  std::ofstream out(file);
  out << "# claim " << to_string(config.claim) << ": " << v.details << "\n";
  out << "# reproduce: " << reproduction_command(config, v) << "\n";
  out << v.digraph;
}

}  // namespace

SearchReport search_counterexamples(const SearchConfig& config) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();

  SearchReport report;
  report.config = config;
  for (int a = config.a_min; a <= config.a_max; ++a) {
    for (std::size_t pi = 0; pi < config.p_values.size(); ++pi) {
      const double p = config.p_values[pi];
      const std::uint64_t total = config.samples_per_cell;
      const unsigned workers =
          static_cast<unsigned>(std::min<std::uint64_t>(config.workers, std::max<std::uint64_t>(total, 1)));

      // Contiguous seed blocks per worker, merged in block order.
      std::vector<CellReport> partial(workers);
      std::vector<std::vector<ViolationRecord>> found(workers);
      auto run_block = [&](unsigned w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        CellReport& cell = partial[w];
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::uint64_t s = sample_seed(config.seed, a, pi, i);
          const auto g = random_bipartite(a, p, s);
          const auto outcome = check_instance(g, config.claim);
          ++cell.samples;
          cell.qualifying += outcome.qualifying;
          for (const auto& name : outcome.counters) ++cell.counters[name];
          if (outcome.violation)
            found[w].push_back(ViolationRecord{a, p, i, s, *outcome.violation, serialize(g)});
        }
      };
      if (workers == 1) {
        run_block(0);
      } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_block, w);
        for (auto& t : threads) t.join();
      }

      CellReport merged;
      merged.a = a;
      merged.p = p;
      for (unsigned w = 0; w < workers; ++w) {
        merged.samples += partial[w].samples;
        merged.qualifying += partial[w].qualifying;
        for (const auto& [name, n] : partial[w].counters) merged.counters[name] += n;
        for (auto& v : found[w]) report.violations.push_back(std::move(v));
      }
      report.cells.push_back(std::move(merged));
    }
  }
  if (config.violation_dir)
    for (const auto& v : report.violations) persist(config, v);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string to_text(const SearchReport& report) {
  const auto& config = report.config;
  std::string out;
  out += "claim=" + std::string(to_string(config.claim)) + "\n";
  out += "seed=" + std::to_string(config.seed) + "\n";
  out += "samples_per_cell=" + std::to_string(config.samples_per_cell) + "\n";
  for (const auto& cell : report.cells) {
    const double rate =
        cell.samples ? static_cast<double>(cell.qualifying) / static_cast<double>(cell.samples)
                     : 0.0;
    out += "cell a=" + std::to_string(cell.a) + " p=" + format_double(cell.p, "%g") +
           " samples=" + std::to_string(cell.samples) +
           " qualifying=" + std::to_string(cell.qualifying) +
           " acceptance_rate=" + format_double(rate, "%.6f");
    for (const auto& [name, n] : cell.counters) out += " " + name + "=" + std::to_string(n);
    out += "\n";
  }
  out += "total_samples=" + std::to_string(report.total_samples()) + "\n";
  out += "total_qualifying=" + std::to_string(report.total_qualifying()) + "\n";
  out += "violations=" + std::to_string(report.violations.size()) + "\n";
  for (const auto& v : report.violations) {
    out += "violation a=" + std::to_string(v.a) + " p=" + format_double(v.p, "%g") +
           " sample=" + std::to_string(v.sample_index) + " seed=" + std::to_string(v.sample_seed) +
           " details=" + v.details + "\n";
    out += "reproduce=" + reproduction_command(config, v) + "\n";
  }
  return out;
}

std::string reproduction_command(const SearchConfig& config, const ViolationRecord& v) {
  return "evenpan gen --family random --a " + std::to_string(v.a) + " --p " +
         format_double(v.p, "%.17g") + " --seed " + std::to_string(v.sample_seed) +
         " | evenpan certify --claim " + std::string(to_string(config.claim)) + " -";
}

namespace {

std::vector<std::pair<Vertex, Vertex>> free_arcs(const Digraph& fixed) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  const int a = fixed.side_size();
  for (Vertex u = 0; u < 2 * a; ++u)
    for (Vertex v = u < a ? a : 0; v < (u < a ? 2 * a : a); ++v)
      if (!fixed.has_arc(u, v)) arcs.emplace_back(u, v);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

bool passes_degree_filter(const Digraph& g, int min_degree) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (total_degree(g, v) < min_degree) return false;
  return true;
}

}  // namespace

SliceReport sweep_slice(const SliceConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  const Digraph& fixed = config.fixed;
  const auto arcs = free_arcs(fixed);
  if (static_cast<int>(arcs.size()) > kMaxFreeArcs)
    throw GraphError(ErrorCode::BadConfig, std::to_string(arcs.size()) + " free arcs exceed " +
                                               std::to_string(kMaxFreeArcs));
  if (config.workers == 0) throw GraphError(ErrorCode::BadConfig, "workers must be positive");

  SliceReport report;
  report.config = config;
  report.free_arcs = static_cast<int>(arcs.size());
  report.members = std::uint64_t{1} << arcs.size();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(config.workers, report.members));

  struct Block {
    std::uint64_t evaluated = 0;
    std::uint64_t qualifying = 0;
    std::map<std::string, std::uint64_t> counters;
    std::vector<ViolationRecord> violations;
  };
  std::vector<Block> blocks(workers);
  auto run_block = [&](unsigned w) {
    const std::uint64_t begin = report.members * w / workers;
    const std::uint64_t end = report.members * (w + 1) / workers;
    Block& block = blocks[w];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      BipartiteDigraph g = config.fixed;
      for (std::size_t i = 0; i < arcs.size(); ++i)
        if ((mask >> i) & 1U) g.add_arc(arcs[i].first, arcs[i].second);
      if (!passes_degree_filter(g, config.min_degree)) continue;
      ++block.evaluated;
      const auto outcome = check_instance(g, config.claim);
      block.qualifying += outcome.qualifying;
      for (const auto& name : outcome.counters) ++block.counters[name];
      if (outcome.violation)
        block.violations.push_back(
            ViolationRecord{g.side_size(), 0.0, mask, 0, *outcome.violation, serialize(g)});
    }
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_block, w);
    for (auto& t : threads) t.join();
  }
  for (auto& block : blocks) {
    report.evaluated += block.evaluated;
    report.qualifying += block.qualifying;
    for (const auto& [name, n] : block.counters) report.counters[name] += n;
    for (auto& v : block.violations) report.violations.push_back(std::move(v));
  }

  if (config.violation_dir) {
    std::filesystem::create_directories(*config.violation_dir);
    for (const auto& v : report.violations) {
      const auto file = *config.violation_dir / ("violation-" + std::string(to_string(config.claim)) +
                                                 "-slice-mask" + std::to_string(v.sample_index) +
                                                 ".txt");
      std::ofstream out(file);
      out << "# claim " << to_string(config.claim) << ": " << v.details << "\n";
      out << "# reproduce: evenpan certify --claim " << to_string(config.claim) << " "
          << file.filename().string() << "\n";
      out << v.digraph;
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string to_text(const SliceReport& report) {
  std::string out;
  out += "claim=" + std::string(to_string(report.config.claim)) + "\n";
  out += "free_arcs=" + std::to_string(report.free_arcs) + "\n";
  out += "min_degree=" + std::to_string(report.config.min_degree) + "\n";
  out += "members=" + std::to_string(report.members) + "\n";
  out += "evaluated=" + std::to_string(report.evaluated) + "\n";
  out += "qualifying=" + std::to_string(report.qualifying) + "\n";
  for (const auto& [name, n] : report.counters) out += name + "=" + std::to_string(n) + "\n";
  out += "violations=" + std::to_string(report.violations.size()) + "\n";
  for (const auto& v : report.violations)
    out += "violation mask=" + std::to_string(v.sample_index) + " details=" + v.details + "\n";
  return out;
}

}  // namespace evenpan
