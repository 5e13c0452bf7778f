#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tardos/lp_model.hpp"

#include <random>

using namespace tardos;

TEST_CASE("parse_instance reads the documented format") {
  const std::string text =
      "# a comment\n"
      "2 3\n"
      "c: 1 1 1\n"
      "b: 3 -1/2\n"
      "1 0 1\n"
      "0 1 1  # trailing comment\n";
  const LPInstance p = parse_instance(text);
  CHECK(p.m() == 2);
  CHECK(p.n() == 3);
  CHECK(p.b[1] == make_rational(-1, 2));
  CHECK(p.a(1, 2) == 1);
  CHECK(p.name.empty());
}

TEST_CASE("parse errors carry location") {
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("2\nc: 1\nb: 1 1\n1\n1\n"), ParseError);
  // wrong entry count in a row
  CHECK_THROWS_AS(parse_instance("2 3\nc: 1 1 1\nb: 1 1\n1 0 1\n0 1\n"), DimensionMismatch);
  // wrong c length
  CHECK_THROWS_AS(parse_instance("1 3\nc: 1 1\nb: 1\n1 0 1\n"), DimensionMismatch);
  try {
    parse_instance("1 2\nc: 1 x\nb: 1\n1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 6);
  }
}

TEST_CASE("serialize/parse round trip is the identity") {
  std::mt19937_64 g(3);
  for (int t = 0; t < 40; ++t) {
    LPInstance p = (t % 2 == 0)
                       ? gen_mincost_flow({.nodes = 2 + t % 5, .arcs = 1 + t % 9 + (1 + t % 5),
                                           .seed = static_cast<std::uint64_t>(t)})
                       : gen_interval_matrix_lp({.rows = 1 + t % 5, .cols = 1 + t % 8,
                                                 .seed = static_cast<std::uint64_t>(t)});
    const std::string text = serialize_instance(p);
    const LPInstance q = parse_instance(text);
    CHECK(q.a == p.a);
    CHECK(q.b == p.b);
    CHECK(q.c == p.c);
    CHECK(q.name == p.name);
    CHECK(serialize_instance(q) == text);
  }
}

TEST_CASE("is_totally_unimodular examples") {
  CHECK(is_totally_unimodular(RMatrix::identity(3), 3).is_tu);

  const auto bad = is_totally_unimodular(RMatrix{{1, 1}, {-1, 1}}, 2);
  CHECK_FALSE(bad.is_tu);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->row_idx == std::vector<std::size_t>{0, 1});
  CHECK(bad.witness->col_idx == std::vector<std::size_t>{0, 1});
  CHECK(abs(bad.witness->det) == 2);

  // Node-arc incidence matrix of a digraph on 4 nodes, 5 arcs.
  RMatrix inc(4, 5);
  const std::pair<std::size_t, std::size_t> arcs[5] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  for (std::size_t e = 0; e < 5; ++e) {
    inc(arcs[e].first, e) = 1;
    inc(arcs[e].second, e) = -1;
  }
  CHECK(is_totally_unimodular(inc, 4).is_tu);
}

TEST_CASE("is_totally_unimodular budget") {
  CHECK_THROWS_AS(is_totally_unimodular(RMatrix::identity(6), 6, 10), SizeLimitExceeded);
}

TEST_CASE("flow generator structure") {
  bool saw_forward = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LPInstance tiny = gen_mincost_flow({.nodes = 2, .arcs = 1, .seed = seed,
                                              .cost_min = 1, .cost_max = 1,
                                              .supply_min = 1, .supply_max = 1});
    CHECK(tiny.m() == 1);
    CHECK(tiny.n() == 1);
    CHECK(abs(tiny.a(0, 0)) == 1);
    CHECK(tiny.b[0] == 1);
    CHECK(tiny.c[0] == 1);
    // A = [[1]] when the kept node is the tail of the single arc.
    if (tiny.a(0, 0) == 1) saw_forward = true;
  }
  CHECK(saw_forward);

  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const LPInstance p = gen_mincost_flow({.nodes = 4, .arcs = 6, .seed = seed});
    CHECK(p.m() == 3);
    CHECK(p.n() == 6);
    // Entries in {-1, 0, 1}; each column has at most one +1 and one -1, and
    // the dropped row makes the implicit supplies sum to zero.
    Rational col_total;
    for (std::size_t j = 0; j < p.n(); ++j) {
      Rational colsum = 0;
      for (std::size_t i = 0; i < p.m(); ++i) {
        CHECK(abs(p.a(i, j)) <= 1);
        colsum += p.a(i, j);
      }
      CHECK(abs(colsum) <= 1);
    }
    CHECK(is_totally_unimodular(p.a, std::min(p.m(), p.n())).is_tu);
    for (const auto& v : p.b) CHECK(is_integer(v));
    for (const auto& v : p.c) CHECK(is_integer(v));
  }

  CHECK_THROWS_AS(gen_mincost_flow({.nodes = 5, .arcs = 1}), InvalidParameters);
  CHECK_THROWS_AS(gen_mincost_flow({.nodes = 1, .arcs = 3}), InvalidParameters);
}

TEST_CASE("flow generator supplies balance against the dropped row") {
  // b entries equal the kept-node supplies; the dropped node absorbs -sum.
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const LPInstance p = gen_mincost_flow({.nodes = 5, .arcs = 8, .seed = seed});
    Rational kept_sum = 0;
    for (const auto& v : p.b) kept_sum += v;
    // Nothing to assert beyond construction: the dropped supply is -kept_sum
    // by definition. Keep the value exercised so the sum stays integral.
    CHECK(is_integer(kept_sum));
  }
}

TEST_CASE("interval generator structure") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const LPInstance p = gen_interval_matrix_lp({.rows = 3, .cols = 4, .seed = seed});
    CHECK(p.m() == 3);
    CHECK(p.n() == 4);
    for (std::size_t i = 0; i < p.m(); ++i) {
      // consecutive ones: pattern 0^a 1^b 0^c with b >= 1
      std::size_t first = p.n(), last = 0;
      for (std::size_t j = 0; j < p.n(); ++j) {
        CHECK((p.a(i, j) == 0 || p.a(i, j) == 1));
        if (p.a(i, j) == 1) {
          first = std::min(first, j);
          last = j;
        }
      }
      REQUIRE(first < p.n());
      for (std::size_t j = first; j <= last; ++j) CHECK(p.a(i, j) == 1);
    }
    CHECK(is_totally_unimodular(p.a, std::min(p.m(), p.n())).is_tu);
  }
  CHECK_THROWS_AS(gen_interval_matrix_lp({.rows = 0, .cols = 4}), InvalidParameters);
}

TEST_CASE("generators are deterministic in the seed") {
  const auto a1 = serialize_instance(gen_mincost_flow({.nodes = 4, .arcs = 6, .seed = 7}));
  const auto a2 = serialize_instance(gen_mincost_flow({.nodes = 4, .arcs = 6, .seed = 7}));
  const auto a3 = serialize_instance(gen_mincost_flow({.nodes = 4, .arcs = 6, .seed = 8}));
  CHECK(a1 == a2);
  CHECK(a1 != a3);
  const auto b1 = serialize_instance(gen_interval_matrix_lp({.rows = 3, .cols = 4, .seed = 1}));
  const auto b2 = serialize_instance(gen_interval_matrix_lp({.rows = 3, .cols = 4, .seed = 1}));
  CHECK(b1 == b2);
}
