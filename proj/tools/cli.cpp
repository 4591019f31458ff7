#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "evenpan/conditions.hpp"
#include "evenpan/cycles.hpp"
#include "evenpan/families.hpp"
#include "evenpan/random.hpp"
#include "evenpan/search.hpp"
#include "evenpan/text_format.hpp"
#include "evenpan/verifier.hpp"

namespace evenpan::cli {

namespace {

using nlohmann::ordered_json;

// Outcome of a subcommand: exit code plus already-rendered stdout.
struct Result {
  int code = kOk;
  std::string text;
  ordered_json json;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

ordered_json cycle_json(const Digraph& g, const Cycle& c) {
  ordered_json vs = ordered_json::array();
  for (Vertex v : c.vertices) vs.push_back(g.name(v));
  return vs;
}

ordered_json cycles_json(const Digraph& g, const std::map<int, Cycle>& cycles) {
  ordered_json obj = ordered_json::object();
  for (const auto& [length, c] : cycles) obj[std::to_string(length)] = cycle_json(g, c);
  return obj;
}

ordered_json hypotheses_json(const HypothesisReport& r) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"predicate", f.predicate}, {"detail", f.detail}});
  return {{"theorem", to_string(r.theorem)}, {"satisfied", r.satisfied}, {"failures", failures}};
}

ordered_json iso_json(const Digraph& g, const IsomorphismWitness& w) {
  ordered_json mapping = ordered_json::object();
  for (Vertex v = 0; v < 8; ++v) mapping[g.name(v)] = d8().name(w.mapping[v]);
  return {{"side_swap", w.side_swap}, {"mapping", mapping}};
}

ordered_json verdict_json(const Digraph& g, const TheoremVerdict& v) {
  ordered_json j = {{"hypotheses", hypotheses_json(v.hypotheses)}};
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          j["conclusion"] = "none";
        } else if constexpr (std::is_same_v<T, PancyclicCertificate>) {
          j["conclusion"] = "pancyclic";
          j["cycles"] = cycles_json(g, c.cycles);
        } else if constexpr (std::is_same_v<T, DirectedCycleWitness>) {
          j["conclusion"] = "directed_cycle";
          j["cycle"] = cycle_json(g, c.cycle);
        } else if constexpr (std::is_same_v<T, TwoAMinus2Cycle>) {
          j["conclusion"] = "cycle_2a_minus_2";
          j["cycle"] = cycle_json(g, c.cycle);
        } else if constexpr (std::is_same_v<T, D8Isomorphism>) {
          j["conclusion"] = "isomorphic_to_d8";
          j["isomorphism"] = iso_json(g, c.witness);
        } else {
          j["conclusion"] = "violation";
          j["claim"] = c.claim;
          j["details"] = c.details;
        }
      },
      v.conclusion);
  return j;
}

int verdict_exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::Confirmed: return kOk;
    case Outcome::HypothesesNotMet: return kHypothesesNotMet;
    case Outcome::Violation: return kViolation;
  }
  return kInternal;
}

// ---- gen ----------------------------------------------------------------

struct GenOptions {
  std::string family;
  int param = 0;
  bool alternate = false;
  int a = 4;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool properties = false;
};

Result run_gen(const GenOptions& o) {
  Result r;
  if (o.family == "random") {
    const auto g = random_bipartite(o.a, o.p, o.seed);
    r.text = serialize(g);
    r.json = {{"family", "random"}, {"digraph", r.text}};
    return r;
  }
  const auto family = parse_family(o.family);
  if (!family) throw GraphError(ErrorCode::BadParams, "unknown family '" + o.family + "'");
  const FamilySpec spec{*family, o.param, o.alternate};
  const auto g = generate(spec);
  r.text = serialize(g);
  r.json = {{"family", to_string(spec)}, {"digraph", r.text}};
  if (o.properties) {
    ordered_json props = ordered_json::array();
    for (const auto& prop : family_properties(spec)) {
      const bool ok = replay(g, prop);
      r.text += "# property " + prop.describe() + " " + (ok ? "holds" : "FAILS") + "\n";
      props.push_back({{"property", prop.describe()}, {"holds", ok}});
      if (!ok) r.code = kViolation;
    }
    r.json["properties"] = props;
  }
  return r;
}

// ---- check --------------------------------------------------------------

struct CheckOptions {
  std::string input = "-";
  int k = 1;
  std::string theorem;
  bool pairs = false;
  bool in_pairs = false;
};

Result run_check(const CheckOptions& o, const Digraph& g) {
  Result r;
  if (!o.theorem.empty()) {
    const auto t = parse_theorem(o.theorem);
    if (!t) throw GraphError(ErrorCode::BadParams, "unknown theorem '" + o.theorem + "'");
    const auto report = check_theorem_hypotheses(g, *t);
    r.text = to_text(report);
    r.json = hypotheses_json(report);
    r.code = report.satisfied ? kOk : kHypothesesNotMet;
    return r;
  }
  if (o.pairs || o.in_pairs) {
    const auto pairs = o.in_pairs ? common_in_neighbor_pairs(g) : dominating_pairs(g);
    ordered_json list = ordered_json::array();
    r.text = std::string(o.in_pairs ? "common_in_neighbor_pairs=" : "dominating_pairs=") +
             std::to_string(pairs.size()) + "\n";
    for (const auto& p : pairs) {
      r.text += "pair " + g.name(p.u) + " " + g.name(p.v) + " witness=" + g.name(p.witness) + "\n";
      list.push_back({{"u", g.name(p.u)}, {"v", g.name(p.v)}, {"witness", g.name(p.witness)}});
    }
    r.json = {{"pairs", list}};
    return r;
  }
  const auto bg = BipartiteDigraph::from(g);
  if (!bg) throw GraphError(ErrorCode::BadParams, "condition B_k needs a bipartite digraph");
  const auto report = check_Bk(*bg, o.k);
  r.text = to_text(g, report);
  r.json = {{"k", report.k},
            {"threshold", report.threshold},
            {"holds", report.holds},
            {"pairs_checked", report.pairs_checked}};
  if (report.worst_pair) {
    const auto& w = *report.worst_pair;
    r.json["worst_pair"] = {{"u", g.name(w.pair.u)},
                            {"v", g.name(w.pair.v)},
                            {"witness", g.name(w.pair.witness)},
                            {"max_degree", w.max_degree}};
  } else {
    r.json["worst_pair"] = nullptr;
  }
  r.code = report.holds ? kOk : kHypothesesNotMet;
  return r;
}

// ---- cycles -------------------------------------------------------------

struct CyclesOptions {
  std::string input = "-";
  int length = 0;
  bool hamiltonian = false;
  bool longest = false;
  std::string bypass_cycle;
  std::string through;
  std::string through_cycle;
  int max_n = EngineLimits{}.max_order;
};

Result run_cycles(const CyclesOptions& o, const Digraph& g) {
  Result r;
  const EngineLimits limits{o.max_n};
  auto single = [&](const char* key, const std::optional<Cycle>& c) {
    if (c) {
      r.text = std::string(key) + " " + std::to_string(c->length()) + ": " + to_text(g, *c) + "\n";
      r.json = {{key, cycle_json(g, *c)}};
    } else {
      r.text = std::string(key) + "=absent\n";
      r.json = {{key, nullptr}};
    }
  };
  if (o.length > 0) {
    if (g.order() > limits.max_order)
      throw GraphError(ErrorCode::TooLarge, "order exceeds --max-n");
    single("cycle", find_cycle_of_length(g, o.length));
  } else if (o.hamiltonian) {
    if (g.order() > limits.max_order)
      throw GraphError(ErrorCode::TooLarge, "order exceeds --max-n");
    single("hamiltonian", find_hamiltonian_cycle(g));
  } else if (o.longest) {
    single("longest_non_hamiltonian", longest_non_hamiltonian_cycle(g, limits));
  } else if (!o.bypass_cycle.empty()) {
    const Cycle c{parse_vertex_sequence(g, o.bypass_cycle)};
    if (const auto b = find_bypass(g, c)) {
      r.text = "bypass gap=" + std::to_string(b->gap) + ": " + to_text(g, b->path) + "\n";
      ordered_json path = ordered_json::array();
      for (Vertex v : b->path.vertices) path.push_back(g.name(v));
      r.json = {{"bypass", {{"gap", b->gap}, {"path", path}}}};
    } else {
      r.text = "bypass=absent\n";
      r.json = {{"bypass", nullptr}};
    }
  } else if (!o.through.empty()) {
    const auto x = parse_vertex_sequence(g, o.through);
    if (x.size() != 1) throw GraphError(ErrorCode::BadParams, "--through takes one vertex");
    const Cycle c{parse_vertex_sequence(g, o.through_cycle)};
    const auto found = cycles_through_vertex(g, c, x.front());
    for (const auto& [length, cycle] : found)
      r.text += "cycle " + std::to_string(length) + ": " + to_text(g, cycle) + "\n";
    r.json = {{"through", g.name(x.front())}, {"cycles", cycles_json(g, found)}};
  } else {
    const auto spectrum = cycle_spectrum(g, limits);
    std::string lengths;
    ordered_json list = ordered_json::array();
    for (int m : spectrum.lengths()) {
      if (!lengths.empty()) lengths += ",";
      lengths += std::to_string(m);
      list.push_back(m);
    }
    r.text = "spectrum={" + lengths + "}\n";
    for (const auto& [length, c] : spectrum.achievable)
      r.text += "cycle " + std::to_string(length) + ": " + to_text(g, c) + "\n";
    r.json = {{"spectrum", list}, {"cycles", cycles_json(g, spectrum.achievable)}};
  }
  return r;
}

// ---- certify ------------------------------------------------------------

struct CertifyOptions {
  std::string input = "-";
  std::string theorem;
  int max_n = EngineLimits{}.max_order;
};

Result run_certify(const CertifyOptions& o, const Digraph& g) {
  Result r;
  if (g.order() > o.max_n)
    throw GraphError(ErrorCode::TooLarge, "order exceeds --max-n");
  const auto claim = parse_claim(o.theorem);
  if (!claim) throw GraphError(ErrorCode::BadParams, "unknown claim '" + o.theorem + "'");
  if (*claim == Claim::T1_8 || *claim == Claim::T1_9 || *claim == Claim::T1_10) {
    const auto verdict = verify_theorem(g, *parse_theorem(o.theorem));
    r.text = to_text(g, verdict);
    r.json = verdict_json(g, verdict);
    r.code = verdict_exit_code(verdict.outcome());
    return r;
  }
  r.text = "claim=" + std::string(to_string(*claim)) + "\n";
  const auto bg = BipartiteDigraph::from(g);
  if (!bg) {
    r.text += "qualifying=0\nviolation=none\n";
    r.json = {{"claim", to_string(*claim)}, {"qualifying", 0}, {"violation", nullptr}};
    r.code = kHypothesesNotMet;
    return r;
  }
  const auto report = check_instance(*bg, *claim);
  r.text += "qualifying=" + std::to_string(report.qualifying) + "\n";
  for (const auto& c : report.counters) r.text += "counter=" + c + "\n";
  r.text += "violation=" + report.violation.value_or("none") + "\n";
  r.json = {{"claim", to_string(*claim)},
            {"qualifying", report.qualifying},
            {"counters", report.counters},
            {"violation", report.violation ? ordered_json(*report.violation) : ordered_json()}};
  r.code = report.violation ? kViolation : report.qualifying ? kOk : kHypothesesNotMet;
  return r;
}

// ---- search -------------------------------------------------------------

struct SearchOptions {
  std::string theorem = "1.10";
  int a = 0;
  int a_min = 4;
  int a_max = 6;
  std::vector<double> p{0.3, 0.5, 0.7};
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out_dir;
  std::string slice;
  int min_degree = 0;
};

unsigned default_workers(unsigned requested) {
  return requested > 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
}

Result run_slice(const SearchOptions& o, Claim claim, const Digraph& fixed, std::ostream& err) {
  Result r;
  const auto bg = BipartiteDigraph::from(fixed);
  if (!bg) throw GraphError(ErrorCode::BadParams, "--slice needs a bipartite digraph");
  SliceConfig config{claim, *bg, o.min_degree, default_workers(o.workers), std::nullopt};
  if (!o.out_dir.empty()) config.violation_dir = o.out_dir;
  const auto report = sweep_slice(config);
  err << "runtime_seconds=" << report.seconds << "\n";
  r.text = to_text(report);
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"mask", v.sample_index}, {"details", v.details}, {"digraph", v.digraph}});
  r.json = {{"claim", to_string(claim)},
            {"free_arcs", report.free_arcs},
            {"min_degree", o.min_degree},
            {"members", report.members},
            {"evaluated", report.evaluated},
            {"qualifying", report.qualifying},
            {"counters", report.counters},
            {"violations", violations}};
  r.code = report.violations.empty() ? kOk : kViolation;
  return r;
}

Result run_search(const SearchOptions& o, std::istream& in, std::ostream& err) {
  Result r;
  const auto claim = parse_claim(o.theorem);
  if (!claim) throw GraphError(ErrorCode::BadParams, "unknown claim '" + o.theorem + "'");
  if (!o.slice.empty()) return run_slice(o, *claim, parse(read_input(o.slice, in)), err);
  SearchConfig config;
  config.claim = *claim;
  config.a_min = o.a > 0 ? o.a : o.a_min;
  config.a_max = o.a > 0 ? o.a : o.a_max;
  config.p_values = o.p;
  config.samples_per_cell = o.samples;
  config.seed = o.seed;
  config.workers = default_workers(o.workers);
  if (!o.out_dir.empty()) config.violation_dir = o.out_dir;
  const auto report = search_counterexamples(config);
  err << "runtime_seconds=" << report.seconds << "\n";
  r.text = to_text(report);
  ordered_json cells = ordered_json::array();
  for (const auto& c : report.cells) {
    ordered_json cell = {{"a", c.a}, {"p", c.p}, {"samples", c.samples}, {"qualifying", c.qualifying}};
    for (const auto& [name, n] : c.counters) cell[name] = n;
    cells.push_back(cell);
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"a", v.a},
                          {"p", v.p},
                          {"sample", v.sample_index},
                          {"seed", v.sample_seed},
                          {"details", v.details},
                          {"digraph", v.digraph},
                          {"reproduce", reproduction_command(config, v)}});
  r.json = {{"claim", to_string(config.claim)},
            {"seed", config.seed},
            {"samples_per_cell", config.samples_per_cell},
            {"cells", cells},
            {"total_samples", report.total_samples()},
            {"total_qualifying", report.total_qualifying()},
            {"violations", violations}};
  r.code = report.violations.empty() ? kOk : kViolation;
  return r;
}

// ---- iso-d8 -------------------------------------------------------------

Result run_iso(const Digraph& g) {
  Result r;
  if (const auto w = iso_to_D8(g)) {
    r.text = "isomorphic=true\n" + to_text(g, *w);
    r.json = {{"isomorphic", true}, {"witness", iso_json(g, *w)}};
  } else {
    r.text = "isomorphic=false\n";
    r.json = {{"isomorphic", false}};
    r.code = kHypothesesNotMet;
  }
  return r;
}

void add_input(CLI::App* cmd, std::string& input) {
  cmd->add_option("input", input, "Digraph file in the exchange format, '-' for stdin")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Even-length cycles in balanced bipartite digraphs", "evenpan"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit structured JSON instead of text");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit the canonical serialization of a family member");
  gen_cmd->add_option("--family", gen.family,
                      "d8, d6, d6prime, cycle, hmm, hm-m1-1, h2m, complete, random")
      ->required();
  gen_cmd->add_option("--param", gen.param, "Family parameter (a or m)");
  gen_cmd->add_flag("--variant", gen.alternate, "Alternate member (H(m,m-1,1), H(2m))");
  gen_cmd->add_option("--a", gen.a, "Side size for --family random")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Arc probability for --family random")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for --family random")->capture_default_str();
  gen_cmd->add_flag("--properties", gen.properties, "Replay the family's expected properties");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate condition B_k or a theorem's hypotheses");
  add_input(check_cmd, check.input);
  check_cmd->add_option("--bk", check.k, "k of condition B_k")->capture_default_str();
  check_cmd->add_option("--theorem", check.theorem, "Report hypotheses of 1.6 .. 1.10");
  check_cmd->add_flag("--pairs", check.pairs, "List dominating pairs");
  check_cmd->add_flag("--in-pairs", check.in_pairs, "List pairs with a common in-neighbour");

  CyclesOptions cycles;
  auto* cycles_cmd = app.add_subcommand("cycles", "Cycle spectrum and cycle queries");
  add_input(cycles_cmd, cycles.input);
  cycles_cmd->add_option("--length", cycles.length, "Find one cycle of this length");
  cycles_cmd->add_flag("--hamiltonian", cycles.hamiltonian, "Find a Hamiltonian cycle");
  cycles_cmd->add_flag("--longest-non-hamiltonian", cycles.longest,
                       "Find a longest non-Hamiltonian cycle");
  cycles_cmd->add_option("--bypass", cycles.bypass_cycle,
                         "Minimum-gap bypass of the given cycle, e.g. \"x1 y1 x2 y3 x3 y0\"");
  auto* through = cycles_cmd->add_option("--through", cycles.through,
                                         "Cycles of every even length through this vertex");
  cycles_cmd->add_option("--cycle", cycles.through_cycle, "Host cycle for --through")
      ->needs(through);
  cycles_cmd->add_option("--max-n", cycles.max_n, "Largest order searched exhaustively")
      ->capture_default_str();

  CertifyOptions certify;
  auto* certify_cmd = app.add_subcommand("certify", "Verdict with certificate for one digraph");
  add_input(certify_cmd, certify.input);
  certify_cmd->add_option("--theorem,--claim", certify.theorem, "1.8, 1.9, 1.10 or 3.1 .. 3.4")
      ->required();
  certify_cmd->add_option("--max-n", certify.max_n, "Largest order searched exhaustively")
      ->capture_default_str();

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Seeded randomized counterexample search");
  search_cmd->add_option("--theorem,--claim", search.theorem, "1.8, 1.9, 1.10 or 3.1 .. 3.4")
      ->capture_default_str();
  search_cmd->add_option("--a", search.a, "Single side size (overrides --a-min/--a-max)");
  search_cmd->add_option("--a-min", search.a_min)->capture_default_str();
  search_cmd->add_option("--a-max", search.a_max)->capture_default_str();
  search_cmd->add_option("--p", search.p, "Arc probabilities")->delimiter(',');
  search_cmd->add_option("--samples", search.samples, "Samples per (a, p) cell")
      ->capture_default_str();
  search_cmd->add_option("--seed", search.seed)->capture_default_str();
  search_cmd->add_option("--workers", search.workers, "Worker threads (default: all cores)");
  search_cmd->add_option("--out", search.out_dir, "Directory for violation files");
  search_cmd->add_option("--slice", search.slice,
                         "Sweep every superset of this digraph's arcs instead of sampling");
  search_cmd->add_option("--min-degree", search.min_degree,
                         "With --slice: skip members with a vertex of smaller degree")
      ->capture_default_str();

  std::string iso_input = "-";
  auto* iso_cmd = app.add_subcommand("iso-d8", "Test isomorphism to D(8)");
  add_input(iso_cmd, iso_input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    // Usage errors list the valid flags of the command that failed.
    const auto used = app.get_subcommands();
    err << (used.empty() ? app.help() : used.front()->help());
    return kUsage;
  }

  auto load = [&](const std::string& path) { return parse(read_input(path, in)); };

  Result result;
  try {
    if (*gen_cmd) {
      result = run_gen(gen);
    } else if (*check_cmd) {
      result = run_check(check, load(check.input));
    } else if (*cycles_cmd) {
      result = run_cycles(cycles, load(cycles.input));
    } else if (*certify_cmd) {
      result = run_certify(certify, load(certify.input));
    } else if (*search_cmd) {
      result = run_search(search, in, err);
    } else if (*iso_cmd) {
      result = run_iso(load(iso_input));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SyntaxError:
      case ErrorCode::WithinSideArc:
      case ErrorCode::DuplicateArc:
      case ErrorCode::Loop:
      case ErrorCode::SideSizeMismatch:
        return e.line() > 0 ? kBadInput : kUsage;
      case ErrorCode::UnknownVertex:
        return e.line() > 0 ? kBadInput : kUsage;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (json) {
    out << result.json.dump(2) << "\n";
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace evenpan::cli
