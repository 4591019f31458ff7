#include "doctest.h"

#include "evenpan/conditions.hpp"
#include "evenpan/cycles.hpp"
#include "evenpan/families.hpp"
#include "evenpan/random.hpp"
#include "evenpan/text_format.hpp"
#include "evenpan/verifier.hpp"
#include "helpers.hpp"

#include <numeric>
#include <random>

using namespace evenpan;

namespace {

// A side-preserving relabeling: x-indices by px, y-indices by py.
std::vector<int> side_perm(const std::array<int, 4>& px, const std::array<int, 4>& py) {
  std::vector<int> perm(8);
  for (int i = 0; i < 4; ++i) {
    perm[i] = px[i];
    perm[4 + i] = 4 + py[i];
  }
  return perm;
}

// Order-8 bipartite digraphs near D(8): relabelings, with and without a
// side swap, arc swaps that keep 20 arcs, and plain random samples.
Digraph iso_candidate(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.begin() + 4, rng);
  std::shuffle(perm.begin() + 4, perm.end(), rng);
  if (rng() & 1)
    for (int& v : perm) v = (v + 4) % 8;
  auto g = testing::relabel(d8(), perm);
  switch (seed % 4) {
    case 0:
      return g;
    case 1: {
      // Move one arc elsewhere; usually breaks the isomorphism.
      const auto arcs = g.arcs();
      const auto [u, v] = arcs[rng() % arcs.size()];
      g.remove_arc(u, v);
      for (int tries = 0; tries < 64; ++tries) {
        const Vertex s = static_cast<Vertex>(rng() % 8);
        const Vertex t = static_cast<Vertex>(s < 4 ? 4 + rng() % 4 : rng() % 4);
        if (!g.has_arc(s, t) && !(s == u && t == v)) {
          g.add_arc(s, t);
          break;
        }
      }
      return g;
    }
    case 2:
      return random_bipartite(4, 0.625, seed);
    default: {
      // Reverse every arc: same degree multiset shape, not always isomorphic.
      auto r = Digraph::bipartite(4);
      for (const auto& [u, v] : g.arcs()) r.add_arc(v, u);
      return r;
    }
  }
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("D(8) is isomorphic to itself by the identity") {
  const auto w = iso_to_D8(d8());
  REQUIRE(w);
  CHECK_FALSE(w->side_swap);
  for (Vertex v = 0; v < 8; ++v) CHECK(w->mapping[v] == v);
}

TEST_CASE("relabeled D(8) yields a valid witness") {
  // x-indices by (0 1), y-indices by (2 3).
  const auto perm = side_perm({1, 0, 2, 3}, {0, 1, 3, 2});
  const auto g = testing::relabel(d8(), perm);
  const auto w = iso_to_D8(g);
  REQUIRE(w);
  CHECK(is_isomorphism_to_D8(g, *w));
  CHECK_FALSE(w->side_swap);
  // The inverse relabeling is a witness, but D(8)'s automorphism x0<->x1,
  // y0<->y1 makes an earlier bijection in search order valid too.
  IsomorphismWitness inverse{};
  for (Vertex v = 0; v < 8; ++v) inverse.mapping[perm[v]] = v;
  CHECK(is_isomorphism_to_D8(g, inverse));
  CHECK(w->mapping == std::array<Vertex, 8>{0, 1, 2, 3, 5, 4, 7, 6});
}

TEST_CASE("fast rejects") {
  auto g = d8();
  g.remove_arc(0, 4);
  CHECK_FALSE(iso_to_D8(g));
  CHECK_FALSE(iso_to_D8(generate(FamilySpec{Family::CompleteBipartite, 4})));
  CHECK_FALSE(iso_to_D8(generate(FamilySpec{Family::D6})));
}

TEST_CASE("iso_to_D8 agrees with the all-bijections oracle") {
  const auto target = oracle::from(d8());
  int positives = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto g = iso_candidate(seed);
    const auto w = iso_to_D8(g);
    const bool expected = oracle::isomorphic(oracle::from(g), target);
    CAPTURE(serialize(g));
    CHECK(w.has_value() == expected);
    if (w) {
      CHECK(is_isomorphism_to_D8(g, *w));
      ++positives;
    }
  }
  CHECK(positives >= 250);
}

TEST_CASE("verdicts on the named examples") {
  const auto d8v = verify_theorem_1_10(d8());
  CHECK(d8v.outcome() == Outcome::Confirmed);
  CHECK(std::holds_alternative<D8Isomorphism>(d8v.conclusion));

  const auto d8_19 = verify_theorem_1_9(d8());
  REQUIRE(std::holds_alternative<PancyclicCertificate>(d8_19.conclusion));
  CHECK(std::get<PancyclicCertificate>(d8_19.conclusion).cycles.size() == 3);

  const auto d8_18 = verify_theorem_1_8(d8());
  CHECK(std::holds_alternative<TwoAMinus2Cycle>(d8_18.conclusion));

  const auto k44 = generate(FamilySpec{Family::CompleteBipartite, 4});
  const auto kv = verify_theorem_1_10(k44);
  REQUIRE(std::holds_alternative<PancyclicCertificate>(kv.conclusion));
  CHECK(std::get<PancyclicCertificate>(kv.conclusion).cycles.size() == 4);
  CHECK(std::get<PancyclicCertificate>(verify_theorem_1_9(k44).conclusion).cycles.size() == 3);

  const auto c8 = generate(FamilySpec{Family::DirectedCycle, 4});
  CHECK(verify_theorem_1_10(c8).outcome() == Outcome::HypothesesNotMet);
  CHECK(verify_theorem_1_9(c8).outcome() == Outcome::HypothesesNotMet);
  const auto c8v = verify_theorem_1_8(c8);
  REQUIRE(std::holds_alternative<DirectedCycleWitness>(c8v.conclusion));
  CHECK(std::get<DirectedCycleWitness>(c8v.conclusion).cycle.length() == 8);
}

TEST_CASE("verify_theorem rejects theorems without a procedure") {
  CHECK_THROWS_AS(verify_theorem(d8(), Theorem::T1_6), GraphError);
}

TEST_CASE("verdicts are total and certificates sound") {
  int confirmed = 0;
  for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
    const int a = 4 + static_cast<int>(seed % 2);
    const auto g = random_bipartite(a, 0.75, seed);
    for (Theorem t : {Theorem::T1_8, Theorem::T1_9, Theorem::T1_10}) {
      const auto v = verify_theorem(g, t);
      CHECK(v.hypotheses.satisfied != (v.outcome() == Outcome::HypothesesNotMet));
      CHECK(v.outcome() != Outcome::Violation);
      CHECK_FALSE(audit(g, v));
      if (v.outcome() == Outcome::Confirmed) ++confirmed;
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, PancyclicCertificate>) {
              for (const auto& [length, cycle] : c.cycles)
                CHECK(oracle::is_cycle(oracle::from(g), testing::seq(cycle.vertices)));
            }
          },
          v.conclusion);
    }
  }
  CHECK(confirmed > 100);
}

TEST_CASE("audit catches a forged certificate") {
  const auto g = generate(FamilySpec{Family::CompleteBipartite, 4});
  auto v = verify_theorem_1_10(g);
  auto& cert = std::get<PancyclicCertificate>(v.conclusion);
  std::swap(cert.cycles.at(4).vertices[0], cert.cycles.at(4).vertices[1]);
  CHECK(audit(g, v).has_value());

  TheoremVerdict forged{Theorem::T1_10, check_theorem_hypotheses(d8(), Theorem::T1_10),
                        D8Isomorphism{IsomorphismWitness{{1, 0, 2, 3, 4, 5, 6, 7}, false}}};
  CHECK(audit(d8(), forged).has_value());
}

TEST_CASE("verdict text") {
  const auto text = to_text(d8(), verify_theorem_1_10(d8()));
  CHECK(text ==
        "theorem=1.10\nhypotheses=satisfied\nconclusion=isomorphic_to_d8\nside_swap=false\n"
        "mapping=x0->x0 x1->x1 x2->x2 x3->x3 y0->y0 y1->y1 y2->y2 y3->y3\n");
}

}  // TEST_SUITE
