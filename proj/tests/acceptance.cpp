// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Sample counts and time limits are pinned below.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>
#include <sstream>
#include <string>
#include <vector>

#include "evenpan/conditions.hpp"
#include "evenpan/cycles.hpp"
#include "evenpan/families.hpp"
#include "evenpan/random.hpp"
#include "evenpan/search.hpp"
#include "evenpan/text_format.hpp"
#include "evenpan/verifier.hpp"
#include "helpers.hpp"

using namespace evenpan;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::uint64_t kTheorem110Samples = 100'000;   // per (a, p) cell
constexpr std::uint64_t kTheorem89Samples = 300'000;    // per (a, p) cell
constexpr std::uint64_t kLemma3234Samples = 50'000;     // per (a, p) cell
constexpr std::uint64_t kLemma33Samples = 5'000;        // per (a, p) cell
constexpr int kOracleDigraphs = 10'000;
constexpr int kRoundTrips = 10'000;
constexpr std::uint64_t kMinQualifying89 = 100'000;
constexpr std::uint64_t kMinQualifyingLemma = 10'000;

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

BipartiteDigraph bip(const Digraph& g) { return *BipartiteDigraph::from(g); }

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

SearchReport run_search(Claim claim, int a_min, int a_max, std::uint64_t samples) {
  SearchConfig config;
  config.claim = claim;
  config.a_min = a_min;
  config.a_max = a_max;
  config.p_values = {0.3, 0.5, 0.7};
  config.samples_per_cell = samples;
  config.seed = kSeed;
  config.workers = workers();
  return search_counterexamples(config);
}

std::string summary(const SearchReport& r) {
  std::ostringstream s;
  s << "claim " << to_string(r.config.claim) << ": samples=" << r.total_samples()
    << " qualifying=" << r.total_qualifying() << " violations=" << r.violations.size();
  return s.str();
}

std::vector<FamilySpec> h_family_specs(int m_max) {
  std::vector<FamilySpec> specs;
  for (int m = 2; m <= m_max; ++m)
    for (bool alt : {false, true})
      for (Family f : {Family::Hmm, Family::Hm_m1_1, Family::H2m}) specs.push_back({f, m, alt});
  return specs;
}

Result d8_suite() {
  Result o;
  const Digraph& g = d8();
  o.require(is_strong(g), "D(8) not strong");
  o.require(check_Bk(bip(g), 1).holds, "D(8) fails B_1");
  o.require(cycle_spectrum(g).lengths() == std::vector<int>{2, 4, 6}, "spectrum != {2,4,6}");
  o.require(!find_hamiltonian_cycle(g), "D(8) Hamiltonian");
  const auto w = iso_to_D8(g);
  bool identity = w && !w->side_swap;
  for (Vertex v = 0; identity && v < 8; ++v) identity = w->mapping[v] == v;
  o.require(identity, "iso_to_D8 did not return the identity");
  o.detail = o.pass ? "strong, B_1, spectrum {2,4,6}, non-Hamiltonian, identity witness" : o.detail;
  return o;
}

Result d6_suite() {
  Result o;
  for (Family f : {Family::D6, Family::D6Prime}) {
    const auto g = generate(FamilySpec{f});
    o.require(!find_hamiltonian_cycle(g), to_string(FamilySpec{f}) + " Hamiltonian");
    o.require(find_cycle_of_length(g, 5).has_value(), to_string(FamilySpec{f}) + " lacks a 5-cycle");
  }
  if (o.pass) o.detail = "D6, D6': non-Hamiltonian, 5-cycle present";
  return o;
}

Result directed_cycles() {
  Result o;
  for (int a = 4; a <= 10; ++a) {
    const auto g = generate(FamilySpec{Family::DirectedCycle, a});
    const auto r = check_Bk(bip(g), 1);
    const std::string name = "C_" + std::to_string(2 * a);
    o.require(r.holds && r.pairs_checked == 0, name + ": B_1 not vacuous");
    o.require(cycle_spectrum(g).lengths() == std::vector<int>{2 * a}, name + ": spectrum");
    const auto v = verify_theorem_1_8(g);
    o.require(std::holds_alternative<DirectedCycleWitness>(v.conclusion) && !audit(g, v),
              name + ": no directed-cycle witness");
  }
  if (o.pass) o.detail = "a=4..10: B_1 vacuous, spectrum {2a}, directed-cycle witness";
  return o;
}

Result h_families() {
  Result o;
  int replayed = 0;
  for (const auto& spec : h_family_specs(6)) {
    const auto g = generate(spec);
    for (const auto& p : family_properties(spec)) {
      o.require(replay(g, p), to_string(spec) + ": " + p.describe());
      ++replayed;
    }
    o.require(!find_hamiltonian_cycle(g), to_string(spec) + " Hamiltonian");
  }
  if (o.pass) o.detail = std::to_string(replayed) + " properties replayed, all members non-Hamiltonian";
  return o;
}

Result theorem_1_10() {
  Result o;
  const auto r = run_search(Claim::T1_10, 4, 6, kTheorem110Samples);
  o.require(r.violations.empty(), summary(r));
  o.require(r.counter("pancyclic") + r.counter("d8_isomorphic") == r.total_qualifying(),
            "qualifying samples without a certificate");
  o.require(r.total_samples() == 9 * kTheorem110Samples, "sample count");
  o.detail = summary(r) + " d8_isomorphic=" + std::to_string(r.counter("d8_isomorphic"));
  return o;
}

Result theorems_1_8_1_9() {
  Result o;
  const auto r8 = run_search(Claim::T1_8, 4, 6, kTheorem89Samples);
  const auto r9 = run_search(Claim::T1_9, 4, 6, kTheorem89Samples);
  const auto combined = r8.total_qualifying() + r9.total_qualifying();
  o.require(r8.violations.empty(), summary(r8));
  o.require(r9.violations.empty(), summary(r9));
  o.require(combined >= kMinQualifying89,
            "only " + std::to_string(combined) + " hypothesis-satisfying evaluations");
  o.detail = summary(r8) + "; " + summary(r9) + "; combined=" + std::to_string(combined);
  return o;
}

Result lemmas_3_2_3_4() {
  Result o;
  const auto r2 = run_search(Claim::L3_2, 4, 5, kLemma3234Samples);
  const auto r4 = run_search(Claim::L3_4, 4, 5, kLemma3234Samples);
  o.require(r2.violations.empty(), summary(r2));
  o.require(r4.violations.empty(), summary(r4));
  o.require(r2.total_qualifying() >= kMinQualifyingLemma, "too few 3.2 instances");
  o.require(r4.total_qualifying() >= kMinQualifyingLemma, "too few 3.4 instances");
  o.detail = summary(r2) + "; " + summary(r4) +
             " gap_one_bypass=" + std::to_string(r4.counter("gap_one_bypass"));
  return o;
}

Result lemma_3_3() {
  Result o;
  const auto r = run_search(Claim::L3_3, 4, 5, kLemma33Samples);
  o.require(r.violations.empty(), summary(r));
  o.require(r.total_qualifying() >= kMinQualifyingLemma, "too few (D, C, x) triples");
  o.detail = summary(r) + " (qualifying counts triples)";
  return o;
}

Result oracle_equivalence() {
  Result o;
  auto agree = [&](const Digraph& g) {
    const auto expected = oracle::smallest_cycles(oracle::from(g));
    const auto spectrum = cycle_spectrum(g);
    bool same = spectrum.achievable.size() == expected.size();
    for (const auto& [length, c] : spectrum.achievable)
      same = same && expected.contains(length) && testing::seq(c.vertices) == expected.at(length);
    return same;
  };
  for (int i = 1; i <= kOracleDigraphs; ++i) {
    const auto g = testing::random_small(static_cast<std::uint64_t>(i), 10);
    o.require(agree(g), "random digraph " + std::to_string(i) + ":\n" + serialize(g));
  }
  std::vector<FamilySpec> families{{Family::D8}, {Family::D6}, {Family::D6Prime}};
  for (int a = 1; a <= 5; ++a) {
    families.push_back({Family::DirectedCycle, a});
    families.push_back({Family::CompleteBipartite, a});
  }
  for (const auto& spec : h_family_specs(5)) families.push_back(spec);
  for (const auto& spec : families) o.require(agree(generate(spec)), to_string(spec));
  if (o.pass)
    o.detail = std::to_string(kOracleDigraphs) + " random digraphs (n <= 10) and " +
               std::to_string(families.size()) + " family members agree";
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream s;
  s << file.rdbuf();
  return s.str();
}

Result serialization() {
  Result o;
  for (int i = 1; i <= kRoundTrips; ++i) {
    const auto g = testing::random_small(static_cast<std::uint64_t>(i) + 1'000'000, 24);
    const auto text = serialize(g);
    o.require(parse(text) == g && serialize(parse(text)) == text,
              "round trip " + std::to_string(i));
  }
  const std::vector<std::pair<FamilySpec, std::string>> goldens{
      {{Family::D8}, "d8.txt"},
      {{Family::D6}, "d6.txt"},
      {{Family::D6Prime}, "d6prime.txt"},
      {{Family::DirectedCycle, 4}, "cycle-4.txt"},
      {{Family::CompleteBipartite, 4}, "complete-4.txt"},
      {{Family::Hmm, 3}, "hmm-3.txt"},
      {{Family::Hm_m1_1, 3}, "hm-m1-1-3.txt"},
      {{Family::Hm_m1_1, 3, true}, "hm-m1-1-3-variant.txt"},
      {{Family::H2m, 3}, "h2m-3.txt"},
      {{Family::H2m, 3, true}, "h2m-3-variant.txt"},
  };
  for (const auto& [spec, file] : goldens)
    o.require(serialize(generate(spec)) == read_file(std::string(GOLDEN_DIR) + "/" + file),
              "golden mismatch: " + file);
  if (o.pass)
    o.detail = std::to_string(kRoundTrips) + " round trips, " + std::to_string(goldens.size()) +
               " family goldens byte-identical";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "D(8) suite", 1.0, d8_suite},
      {2, "D6 and D6'", 1.0, d6_suite},
      {3, "directed cycles C_2a", 1.0, directed_cycles},
      {4, "H-family generators", 5.0, h_families},
      {5, "Theorem 1.10 randomized", 600.0, theorem_1_10},
      {6, "Theorems 1.8 and 1.9 randomized", 600.0, theorems_1_8_1_9},
      {7, "Lemmas 3.2 and 3.4 properties", 600.0, lemmas_3_2_3_4},
      {8, "Lemma 3.3 instances", 600.0, lemma_3_3},
      {9, "spectrum oracle equivalence", 600.0, oracle_equivalence},
      {10, "serialization and goldens", 60.0, serialization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (time limit exceeded)";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s [%.3f s, limit %.0f s] %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name, seconds, c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
