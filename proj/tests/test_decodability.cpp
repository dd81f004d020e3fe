#include "graphcode/decodability.hpp"
#include "graphcode/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace graphcode;

TEST_CASE("structural criterion on small cases") {
  const auto triangle = build(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_FALSE(is_decodable_structural(triangle, ParityClass::even));
  CHECK(is_decodable_structural(triangle, ParityClass::odd));

  const auto square = build(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK_FALSE(is_decodable_structural(square, ParityClass::odd));

  const auto looped_path = build(3, {{1, 2}, {2, 3}, {3, 3}});
  CHECK(is_decodable_structural(looped_path, ParityClass::even));
  CHECK(is_decodable_structural(looped_path, ParityClass::odd));

  // Isolated vertices are never recoverable.
  CHECK_FALSE(is_decodable_structural(build(2, {{1, 1}}), ParityClass::even));
  CHECK_FALSE(is_decodable_structural(build(2, {{1, 1}}), ParityClass::odd));
}

TEST_CASE("incidence matrix rows") {
  const auto g = build(3, {{1, 2}, {3, 3}});
  const auto b = incidence_matrix(g);
  REQUIRE(b.rows() == 2);
  REQUIRE(b.cols() == 3);
  CHECK(b(0, 0) == 1);
  CHECK(b(0, 1) == 1);
  CHECK(b(0, 2) == 0);
  CHECK(b(1, 2) == 1);
  CHECK(b.row(1).sum() == 1);
}

TEST_CASE("adjacency diagonal holds loop degree") {
  const auto g = build(2, {{1, 1}, {1, 1}, {1, 2}, {2, 1}});
  const auto a = adjacency_matrix<int>(g);
  CHECK(a(0, 0) == 2);
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 0) == 2);
  CHECK(a(1, 1) == 0);
}

TEST_CASE("trace criterion for odd parity") {
  CHECK(is_decodable_trace(build(3, {{1, 2}, {2, 3}, {3, 1}})));
  CHECK_FALSE(is_decodable_trace(build(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  CHECK(is_decodable_trace(build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}})));
  CHECK_FALSE(is_decodable_trace(build(2, {{1, 1}})));
  CHECK(is_decodable_trace<long long>(build(1, {{1, 1}})));
}

TEST_CASE("parity parsing") {
  CHECK(parse_parity("even") == ParityClass::even);
  CHECK(parse_parity("odd") == ParityClass::odd);
  CHECK_THROWS_AS(parse_parity("both"), InputError);
  CHECK(parity_of(FieldSpec(2)) == ParityClass::even);
  CHECK(parity_of(FieldSpec(7)) == ParityClass::odd);
}

TEST_CASE("subgraph tester agrees with materialized subgraphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto g = oracle::random_graph(rng, n, static_cast<int>(rng() % 10));
    for (ParityClass parity : {ParityClass::even, ParityClass::odd}) {
      SubgraphTester tester(g, parity);
      for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << g.edge_count()); kept += 1 + rng() % 7) {
        EdgeIdSet gone;
        for (int i = 0; i < g.edge_count(); ++i) {
          if (!(kept >> i & 1)) gone.insert(g.edges()[static_cast<std::size_t>(i)].id);
        }
        const auto h = delete_edges(g, gone);
        CHECK(tester.decodable(kept) == is_decodable_structural(h, parity));
      }
    }
  }
}

TEST_CASE("rank criterion agrees with an independent elimination") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = oracle::random_graph(rng, n, static_cast<int>(rng() % 12));
    for (std::uint32_t p : {2u, 3u, 7u}) {
      CHECK(is_decodable_rank(g, FieldSpec(p)) == oracle::decodable(n, oracle::edge_list(g), p));
    }
  }
}
