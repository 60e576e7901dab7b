#include <random>

#include "doctest.h"
#include "neumaier/constructions.hpp"
#include "neumaier/error.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/group.hpp"

using namespace neumaier;

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6("C~") == complete_graph(4));

  const auto p = petersen_graph();
  CHECK(from_graph6(to_graph6(p)) == p);
  // 63 vertices is the last single-byte size
  const auto c = cycle_graph(70);
  CHECK(from_graph6(to_graph6(c)) == c);
}

TEST_CASE("truncated graph6 reports a byte offset") {
  const auto full = to_graph6(petersen_graph());
  const auto cut = full.substr(0, full.size() - 2);
  try {
    from_graph6(cut);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == cut.size());
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 1], [1, "), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 5]]}"), InvalidArgument);
}

TEST_CASE("json round trip keeps provenance") {
  const auto g = gamma(GammaSpec::make(3, 4, 7));
  const auto back = parse_graph(write_graph(g, GraphFormat::Json));
  CHECK(back == g);
  REQUIRE(back.meta.has_value());
  CHECK(back.meta->construction == "gamma");
  CHECK(back.meta->m == 3);
  CHECK(back.meta->q2 == 7);
  CHECK(parse_graph(write_graph(g, GraphFormat::Graph6)) == g);
}

TEST_CASE("circulants and Cayley graphs") {
  const auto z5 = AbelianGroup::cyclic({5});
  CHECK(cayley_graph(z5, ConnectionSet::make({1, 4}, "S")) == cycle_graph(5));
  CHECK(cayley_graph(z5, ConnectionSet::make({}, "empty")).edge_count() == 0);
  // not closed under negation
  CHECK(asymmetry_witness(z5, ConnectionSet::make({1}, "S")).has_value());
}

TEST_CASE("group ring product against a dense convolution") {
  const auto g = AbelianGroup::cyclic({2, 8});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int round = 0; round < 20; ++round) {
    GroupRingVector a(g.size()), b(g.size());
    for (auto& x : a) x = coeff(rng) * (rng() % 3 == 0);
    for (auto& x : b) x = coeff(rng);
    GroupRingVector dense(g.size(), 0);
    for (std::uint32_t x = 0; x < g.size(); ++x)
      for (std::uint32_t y = 0; y < g.size(); ++y) dense[g.add(x, y)] += a[x] * b[y];
    CHECK(group_ring_mul(g, a, b) == dense);
  }
  const std::uint32_t x = 3, y = 12;
  const auto prod = group_ring_mul(g, indicator(g, std::vector<std::uint32_t>{x}), indicator(g, std::vector<std::uint32_t>{y}));
  CHECK(prod == indicator(g, std::vector<std::uint32_t>{g.add(x, y)}));
}

TEST_CASE("field product group") {
  const auto spec = GammaSpec::make(3, 4, 7);
  const auto g = spec.group();
  CHECK(g.size() == 28);
  for (std::uint32_t x = 0; x < g.size(); ++x) CHECK(g.add(x, g.neg(x)) == g.identity());
}
