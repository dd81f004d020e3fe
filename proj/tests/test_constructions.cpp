#include "graphcode/constructions.hpp"
#include "graphcode/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace graphcode;

namespace {

Encoding one(int j) { return Encoding::single(VertexId{j}); }
Encoding two(int j, int k) { return Encoding::pair(VertexId{j}, VertexId{k}); }

}  // namespace

TEST_CASE("algorithm1 table for n=9, r=2, k=3, L=4") {
  const auto c = algorithm1(9, 2, 3, 4);
  const std::vector<Encoding> expected{
      one(1), one(2), two(3, 4), two(4, 5), two(5, 6), two(6, 1),
      one(4), two(5, 8), two(6, 7), two(7, 8), two(8, 9), two(9, 4),
      one(7), two(8, 2), two(9, 1), two(1, 2), two(2, 3), two(3, 7),
  };
  CHECK(c.n == 9);
  CHECK(c.encodings == expected);
  CHECK(c.redundancy() == 2.0);
}

TEST_CASE("algorithm1 loop count and size") {
  for (int loops = 0; loops <= 9; ++loops) {
    const auto g = scheme_to_graph(algorithm1(9, 2, 3, loops));
    CHECK(g.edge_count() == 18);
    CHECK(g.loop_count() == loops);
  }
  CHECK_THROWS_AS(algorithm1(9, 2, 2, 0), InputError);
  CHECK_THROWS_AS(algorithm1(9, 2, 9, 0), InputError);
  CHECK_THROWS_AS(algorithm1(9, 0, 3, 0), InputError);
  CHECK_THROWS_AS(algorithm1(9, 2, 3, 10), InputError);
}

TEST_CASE("algorithm2 for n=9, r=2") {
  const auto c = algorithm2(9, 2);
  REQUIRE(c.size() == 18);
  for (int i = 1; i <= 9; ++i) {
    CHECK(c.encodings[static_cast<std::size_t>(i - 1)] == two(i, wrap_index(i + 1, 9)));
    CHECK(c.encodings[static_cast<std::size_t>(i + 8)] == two(i, wrap_index(i + 2, 9)));
  }
  CHECK_THROWS_AS(algorithm2(2, 1), InputError);
  CHECK_THROWS_AS(algorithm2(5, 5), InputError);
}

TEST_CASE("uncoded is vertex-major") {
  const auto c = uncoded(3, 2);
  CHECK(c.encodings == std::vector<Encoding>{one(1), one(1), one(2), one(2), one(3), one(3)});
}

TEST_CASE("scheme and graph are interchangeable") {
  for (const auto& lg : comparison_graphs()) {
    CHECK(scheme_to_graph(graph_to_scheme(lg.graph)) == lg.graph);
  }
  const auto c = algorithm2(7, 3);
  CHECK(graph_to_scheme(scheme_to_graph(c)) == c);
  std::stringstream io;
  write_scheme(io, c);
  CHECK(read_scheme(io) == c);
}

TEST_CASE("hypothesis warnings") {
  CHECK(algorithm1_warnings(9, 2, 3, 3).empty());
  CHECK(algorithm1_warnings(9, 2, 3, 4).empty());
  CHECK(algorithm1_warnings(9, 2, 3, 5).size() == 1);   // u claim needs L in {2r-1, 2r}
  CHECK(algorithm1_warnings(9, 2, 3, 0).size() == 1);
  CHECK(algorithm1_warnings(9, 2, 3, 9).size() == 2);   // also past the ring columns
  CHECK(algorithm2_warnings(9, 2).empty());
  CHECK(algorithm2_warnings(9, 4).size() == 1);
  CHECK_THROWS_AS((void)Encoding::pair(VertexId{2}, VertexId{2}), InputError);
}

TEST_CASE("comparison labels") {
  const auto graphs = comparison_graphs();
  REQUIRE(graphs.size() == 12);
  CHECK(graphs.front().label == "G_0");
  CHECK(graphs[9].label == "G_9");
  CHECK(graphs[10].label == "G'");
  CHECK(graphs[11].label == "G");
  CHECK(wrap_index(0, 9) == 9);
  CHECK(wrap_index(19, 9) == 1);
}
