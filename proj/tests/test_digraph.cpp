#include "doctest.h"

#include "evenpan/families.hpp"
#include "evenpan/random.hpp"
#include "evenpan/text_format.hpp"
#include "helpers.hpp"

using namespace evenpan;

namespace {

Digraph d8_graph() { return generate(FamilySpec{Family::D8}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.code();
  }
  FAIL("expected GraphError");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_SUITE("digraph") {

TEST_CASE("vertex names") {
  CHECK(to_string(VertexId{Side::X, 3}) == "x3");
  CHECK(to_string(VertexId{Side::Y, 0}) == "y0");
  CHECK(to_string(VertexId{Side::General, 12}) == "v12");
  CHECK(parse_vertex_name("y10") == VertexId{Side::Y, 10});
  CHECK_FALSE(parse_vertex_name("x01"));
  CHECK_FALSE(parse_vertex_name("z1"));
  CHECK_FALSE(parse_vertex_name("x"));
  CHECK_FALSE(parse_vertex_name("x-1"));
  CHECK(VertexId{Side::X, 3} < VertexId{Side::Y, 0});
}

TEST_CASE("layout is enforced on insertion") {
  auto g = Digraph::bipartite(3);
  CHECK(g.order() == 6);
  CHECK(g.name(0) == "x0");
  CHECK(g.name(3) == "y0");
  CHECK(code_of([&] { g.add_arc(0, 1); }) == ErrorCode::WithinSideArc);
  CHECK(code_of([&] { g.add_arc(0, 0); }) == ErrorCode::Loop);
  g.add_arc(0, 3);
  CHECK(code_of([&] { g.add_arc(0, 3); }) == ErrorCode::DuplicateArc);
  CHECK(code_of([&] { g.add_arc(0, 6); }) == ErrorCode::UnknownVertex);
  CHECK(g.remove_arc(0, 3));
  CHECK_FALSE(g.remove_arc(0, 3));
  CHECK(g.arc_count() == 0);

  CHECK(code_of([] { Digraph::bipartite(0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { Digraph::bipartite(33); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { Digraph::general(65); }) == ErrorCode::TooLarge);
}

TEST_CASE("validate_bipartite reports the first violated invariant") {
  RawBipartite raw{2, 2, {{"x0", "y1"}, {"y1", "x1"}}, {}};
  const auto g = validate_bipartite(raw);
  CHECK(Digraph(g).arc_count() == 2);

  auto expect = [](RawBipartite r, ErrorCode code) {
    CHECK(code_of([&] { validate_bipartite(r); }) == code);
  };
  expect({2, 3, {}, {}}, ErrorCode::SideSizeMismatch);
  expect({2, 2, {{"x0", "x1"}}, {}}, ErrorCode::WithinSideArc);
  expect({2, 2, {{"x0", "y0"}, {"x0", "y0"}}, {}}, ErrorCode::DuplicateArc);
  expect({2, 2, {{"x0", "x0"}}, {}}, ErrorCode::Loop);
  expect({2, 2, {{"x0", "y2"}}, {}}, ErrorCode::UnknownVertex);
  expect({2, 2, {{"v0", "y1"}}, {}}, ErrorCode::UnknownVertex);
}

TEST_CASE("degrees in D(8)") {
  const auto g = d8_graph();
  const auto x0 = degree(g, VertexId{Side::X, 0});
  CHECK(x0.out == 1);
  CHECK(x0.in == 2);
  CHECK(x0.total == 3);
  const auto x2 = degree(g, VertexId{Side::X, 2});
  CHECK(x2.out == 4);
  CHECK(x2.in == 3);
  CHECK(x2.total == 7);

  const std::vector<VertexId> ys{{Side::Y, 0}, {Side::Y, 1}};
  CHECK(restricted_degree(g, VertexId{Side::X, 0}, ys) == 3);
  CHECK(restricted_degree(g, 0, g.side_set(Side::Y)) == 3);
}

TEST_CASE("dominating pairs of D(8)") {
  const auto g = d8_graph();
  const auto pairs = dominating_pairs(g);
  // Every X-pair but {x0, x1} and every Y-pair but {y2, y3}.
  CHECK(pairs.size() == 10);
  for (const auto& p : pairs) {
    CHECK(g.side_of(p.u) == g.side_of(p.v));
    const bool x01 = p.u == 0 && p.v == 1;
    const bool y23 = p.u == 6 && p.v == 7;
    CHECK_FALSE((x01 || y23));
  }
}

TEST_CASE("pair queries, strength and 2-connectivity against oracles") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const auto g = testing::random_small(seed, 10);
    const auto m = oracle::from(g);
    CAPTURE(serialize(g));
    const auto pairs = dominating_pairs(g);
    const auto expected = oracle::dominating_pairs(m);
    REQUIRE(pairs.size() == expected.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      CHECK(pairs[i].u == expected[i].u);
      CHECK(pairs[i].v == expected[i].v);
      CHECK(pairs[i].witness == expected[i].witness);
    }
    CHECK(is_strong(g) == oracle::strong(m));
    if (g.order() >= 3) CHECK(underlying_two_connected(g) == oracle::two_connected(m));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(total_degree(g, v) == oracle::degree(m, v));
  }
}

TEST_CASE("common in-neighbour pairs are dominating pairs of the converse") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = testing::random_small(seed, 10);
    auto converse = g.is_bipartite() ? Digraph::bipartite(g.side_size()) : Digraph::general(g.order());
    for (const auto& [u, v] : g.arcs()) converse.add_arc(v, u);
    const auto lhs = common_in_neighbor_pairs(g);
    const auto rhs = dominating_pairs(converse);
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i].witness == rhs[i].witness);
  }
}

TEST_CASE("2-connectivity needs three vertices") {
  auto g = Digraph::general(2);
  g.add_arc(0, 1);
  CHECK(code_of([&] { underlying_two_connected(g); }) == ErrorCode::TooSmall);
}

}  // TEST_SUITE
