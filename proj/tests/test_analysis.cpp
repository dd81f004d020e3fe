#include "graphcode/analysis.hpp"
#include "graphcode/constructions.hpp"
#include "graphcode/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace graphcode;

namespace {

std::vector<long long> as_ll(const DeletionSpectrum& s) {
  std::vector<long long> out;
  for (const auto& c : s.counts) out.push_back(c.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("triangle spectrum") {
  const auto g = build(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto odd = deletion_spectrum(g, ParityClass::odd);
  CHECK(as_ll(odd) == std::vector<long long>{1, 0, 0, 0});
  CHECK(odd.undecodable(1) == 3);
  CHECK(decoding_probability(odd, 0.5) == doctest::Approx(0.125).epsilon(1e-15));
  const auto even = deletion_spectrum(g, ParityClass::even);
  CHECK(as_ll(even) == std::vector<long long>{0, 0, 0, 0});
  CHECK(decoding_probability(even, 0.9) == 0.0);
}

TEST_CASE("spectrum agrees with the materializing oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto g = oracle::random_graph(rng, n, static_cast<int>(rng() % 11));
    CHECK(as_ll(deletion_spectrum(g, ParityClass::even)) == oracle::spectrum(g, 2));
    CHECK(as_ll(deletion_spectrum(g, ParityClass::odd)) == oracle::spectrum(g, 3));
  }
}

TEST_CASE("spectrum does not depend on thread count") {
  const auto g = comparison_graphs()[3].graph;
  const auto one = deletion_spectrum(g, ParityClass::even, {26, 1});
  const auto many = deletion_spectrum(g, ParityClass::even, {26, 7});
  CHECK(one == many);
}

TEST_CASE("enumeration cap") {
  const auto g = scheme_to_graph(uncoded(14, 2));
  CHECK_THROWS_AS(deletion_spectrum(g, ParityClass::even), SizeError);
  CHECK_THROWS_AS(deletion_spectrum(build(2, {{1, 2}, {1, 1}}), ParityClass::even, {1, 1}), SizeError);
}

TEST_CASE("decoding polynomial") {
  const auto s = deletion_spectrum(scheme_to_graph(uncoded(3, 3)), ParityClass::even);
  const DecodingPolynomial poly(s);
  CHECK(poly.degree() == 9);
  CHECK(poly(1.0, 0.0) == 1.0);
  CHECK(poly.exact(Rational(1, 2), Rational(1, 2)) == Rational(343, 512));
  CHECK(decoding_probability_exact(s, Rational(1, 2)) == Rational(343, 512));
  CHECK_THROWS_AS(decoding_probability(s, 1.5), InputError);
  CHECK_THROWS_AS(decoding_probability_exact(s, Rational(-1, 3)), InputError);
}

TEST_CASE("P is nondecreasing in p") {
  const auto s = deletion_spectrum(comparison_graphs()[10].graph, ParityClass::odd);
  double prev = 0;
  for (int i = 0; i <= 100; ++i) {
    const double v = decoding_probability(s, i / 100.0);
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("min_dcut returns the lexicographically first witness") {
  const auto g = build(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto cut = min_dcut(g, ParityClass::odd);
  CHECK(cut.size == 1);
  CHECK(cut.witness == EdgeIdSet{EdgeId{1}});
  const auto none = min_dcut(g, ParityClass::even);
  CHECK(none.size == 0);
  CHECK(none.witness.empty());

  const auto looped = build(2, {{1, 1}, {1, 2}, {2, 2}, {1, 2}});
  const auto c2 = min_dcut(looped, ParityClass::even);
  CHECK(c2.size == 2);
  CHECK(c2.witness == EdgeIdSet{EdgeId{1}, EdgeId{3}});
}

TEST_CASE("min_dcut matches the spectrum") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 10));
    for (ParityClass parity : {ParityClass::even, ParityClass::odd}) {
      const auto s = deletion_spectrum(g, parity);
      const auto cut = min_dcut(g, parity);
      int first = 0;
      while (s.undecodable(first) == 0) ++first;
      CHECK(cut.size == first);
      CHECK(static_cast<int>(cut.witness.size()) == cut.size);
      CHECK_FALSE(is_decodable_structural(delete_edges(g, cut.witness), parity));
    }
  }
}

TEST_CASE("recurrence equals enumeration") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 12), 0.2);
    for (ParityClass parity : {ParityClass::even, ParityClass::odd}) {
      CHECK(spectrum_by_recurrence(g, parity) == deletion_spectrum(g, parity));
    }
  }
  for (const auto& lg : comparison_graphs()) {
    CHECK(spectrum_by_recurrence(lg.graph, ParityClass::even) == deletion_spectrum(lg.graph, ParityClass::even));
  }
}

TEST_CASE("summing over partial parallel-class deletions overcounts") {
  // Double edge u-v plus a path u-w-v with a loop at w. Summing
  // C(k,j) c_{x-j}(G - e^j) over j = 1..k counts a deletion of both parallel
  // edges once per j, so it cannot equal c_x(G) - c_x(G.e^k) for k = 2.
  const auto g = build(3, {{1, 2}, {1, 2}, {1, 3}, {3, 2}, {3, 3}});
  const auto exact = deletion_spectrum(g, ParityClass::even);
  const auto one = delete_edges(g, {EdgeId{1}});
  const auto both = delete_edges(g, {EdgeId{1}, EdgeId{2}});
  const auto contracted = contract_parallel_class(g, VertexId{1}, VertexId{2});
  const auto s1 = deletion_spectrum(one, ParityClass::even);
  const auto s2 = deletion_spectrum(both, ParityClass::even);
  const auto sc = deletion_spectrum(contracted, ParityClass::even);
  bool differs = false;
  for (int x = 0; x <= g.edge_count(); ++x) {
    const BigInt literal = 2 * s1.decodable(x - 1) + s2.decodable(x - 2) + sc.decodable(x);
    if (literal != exact.decodable(x)) differs = true;
  }
  CHECK(differs);
  CHECK(spectrum_by_recurrence(g, ParityClass::even) == exact);
}

TEST_CASE("monte carlo is reproducible and thread independent") {
  const auto g = comparison_graphs()[3].graph;
  const auto a = monte_carlo_probability(g, ParityClass::even, 0.6, 200000, 99, 1);
  const auto b = monte_carlo_probability(g, ParityClass::even, 0.6, 200000, 99, 5);
  CHECK(a.successes == b.successes);
  const auto c = monte_carlo_probability(g, ParityClass::even, 0.6, 200000, 100, 2);
  CHECK(a.successes != c.successes);
  CHECK(std::abs(a.estimate - 0.607826) < 4 * a.std_error);
  CHECK_THROWS_AS(monte_carlo_probability(g, ParityClass::even, 1.2, 10, 1), InputError);
  CHECK(monte_carlo_probability(g, ParityClass::even, 1.0, 1000, 1).successes == 1000);
  CHECK(monte_carlo_probability(g, ParityClass::even, 0.0, 1000, 1).successes == 0);
}

TEST_CASE("spectrum text round trip") {
  const auto s = deletion_spectrum(build(3, {{1, 2}, {2, 3}, {3, 1}, {1, 1}}), ParityClass::odd);
  std::stringstream io;
  write_spectrum(io, s);
  CHECK(io.str().rfind("m 4 parity odd\n0 1\n", 0) == 0);
  CHECK(read_spectrum(io) == s);
  std::istringstream bad("m 2 parity odd\n0 1\n1 5\n2 0\n");
  CHECK_THROWS_AS(read_spectrum(bad), InputError);
}
