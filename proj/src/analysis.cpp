#include "graphcode/analysis.hpp"

#include "graphcode/errors.hpp"
#include "graphcode/parallel.hpp"
#include "graphcode/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace graphcode {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt DeletionSpectrum::decodable(int x) const {
  if (x < 0 || x > m) return 0;
  return counts[static_cast<std::size_t>(x)];
}

BigInt DeletionSpectrum::undecodable(int x) const {
  if (x < 0 || x > m) return 0;
  return binomial(m, x) - counts[static_cast<std::size_t>(x)];
}

double DecodingPolynomial::operator()(double y, double z) const {
  long double sum = 0;
  for (int x = 0; x <= m_; ++x) {
    const auto& c = coefficients_[static_cast<std::size_t>(x)];
    if (c == 0) continue;
    sum += c.convert_to<long double>() * std::pow(static_cast<long double>(y), m_ - x) *
           std::pow(static_cast<long double>(z), x);
  }
  return static_cast<double>(sum);
}

Rational DecodingPolynomial::exact(const Rational& y, const Rational& z) const {
  Rational sum = 0;
  for (int x = 0; x <= m_; ++x) {
    const auto& c = coefficients_[static_cast<std::size_t>(x)];
    if (c == 0) continue;
    Rational term = c;
    for (int i = 0; i < m_ - x; ++i) term *= y;
    for (int i = 0; i < x; ++i) term *= z;
    sum += term;
  }
  return sum;
}

DeletionSpectrum deletion_spectrum(const MultiGraph& g, ParityClass parity,
                                   const EnumerationOptions& options) {
  const int m = g.edge_count();
  if (m > options.max_edges || m > 62) {
    throw SizeError("m = " + std::to_string(m) + " exceeds the enumeration cap of " +
                    std::to_string(std::min(options.max_edges, 62)) +
                    "; use monte_carlo or the recurrence");
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::uint64_t full = total - 1;
  constexpr int kBlockBits = 14;
  const std::uint64_t block_size = std::min<std::uint64_t>(total, std::uint64_t{1} << kBlockBits);
  const std::uint64_t blocks = total / block_size;

  const int workers = resolve_threads(options.threads);
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1));
  std::vector<SubgraphTester> testers(static_cast<std::size_t>(workers), SubgraphTester(g, parity));

  parallel_blocks(blocks, workers, [&](int w, std::uint64_t block) {
    auto& counts = partial[static_cast<std::size_t>(w)];
    auto& tester = testers[static_cast<std::size_t>(w)];
    const std::uint64_t begin = block * block_size;
    for (std::uint64_t deleted = begin; deleted < begin + block_size; ++deleted) {
      if (tester.decodable(full & ~deleted)) ++counts[static_cast<std::size_t>(std::popcount(deleted))];
    }
  });

  DeletionSpectrum s;
  s.m = m;
  s.parity = parity;
  s.counts.assign(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& counts : partial) {
    for (int x = 0; x <= m; ++x) s.counts[static_cast<std::size_t>(x)] += counts[static_cast<std::size_t>(x)];
  }
  return s;
}

double decoding_probability(const DeletionSpectrum& s, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
  return DecodingPolynomial(s)(p, 1.0 - p);
}

Rational decoding_probability_exact(const DeletionSpectrum& s, const Rational& p) {
  if (p < 0 || p > 1) throw InputError("probability must lie in [0, 1]");
  return DecodingPolynomial(s).exact(p, Rational(1) - p);
}

DCutResult min_dcut(const MultiGraph& g, ParityClass parity) {
  const int m = g.edge_count();
  if (m > 64) throw SizeError("min_dcut supports at most 64 edges");
  const auto edges = g.edges();
  std::vector<int> by_id(static_cast<std::size_t>(m));
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(),
            [&](int a, int b) { return edges[static_cast<std::size_t>(a)].id < edges[static_cast<std::size_t>(b)].id; });
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  SubgraphTester tester(g, parity);
  for (int x = 0; x <= m; ++x) {
    // Positions into by_id, advanced in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(x));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t deleted = 0;
      for (int pos : pick) deleted |= std::uint64_t{1} << by_id[static_cast<std::size_t>(pos)];
      if (!tester.decodable(full & ~deleted)) {
        DCutResult result;
        result.size = x;
        for (int pos : pick) result.witness.insert(edges[static_cast<std::size_t>(by_id[static_cast<std::size_t>(pos)])].id);
        return result;
      }
      int i = x - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - x + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < x; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw InternalError("deleting every edge left a decodable graph");
}

MonteCarloEstimate monte_carlo_probability(const MultiGraph& g, ParityClass parity, double p,
                                           std::uint64_t trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw InputError("trials must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
  const int workers = resolve_threads(threads);
  const std::uint64_t blocks = (trials + kTrialsPerStream - 1) / kTrialsPerStream;
  std::vector<std::uint64_t> block_successes(blocks, 0);
  std::vector<SubgraphTester> testers(static_cast<std::size_t>(workers), SubgraphTester(g, parity));
  const auto m = static_cast<std::size_t>(g.edge_count());

  parallel_blocks(blocks, workers, [&](int w, std::uint64_t block) {
    auto& tester = testers[static_cast<std::size_t>(w)];
    RandomStream rng(seed, block);
    std::vector<char> kept(m);
    const std::uint64_t begin = block * kTrialsPerStream;
    const std::uint64_t end = std::min(trials, begin + kTrialsPerStream);
    std::uint64_t wins = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      for (auto& k : kept) k = rng.bernoulli(p) ? 1 : 0;
      if (tester.decodable_if([&](std::size_t i) { return kept[i] != 0; })) ++wins;
    }
    block_successes[block] = wins;
  });

  MonteCarloEstimate est;
  est.p = p;
  est.trials = trials;
  est.seed = seed;
  est.successes = std::accumulate(block_successes.begin(), block_successes.end(), std::uint64_t{0});
  est.estimate = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

void write_spectrum(std::ostream& out, const DeletionSpectrum& s) {
  out << "m " << s.m << " parity " << to_string(s.parity) << '\n';
  for (int x = 0; x <= s.m; ++x) out << x << ' ' << s.counts[static_cast<std::size_t>(x)] << '\n';
}

DeletionSpectrum read_spectrum(std::istream& in) {
  DeletionSpectrum s;
  std::string m_tag;
  std::string parity_tag;
  std::string parity_text;
  if (!(in >> m_tag >> s.m >> parity_tag >> parity_text) || m_tag != "m" || parity_tag != "parity" ||
      s.m < 0) {
    throw InputError("spectrum header must be \"m <m> parity <even|odd>\"");
  }
  s.parity = parse_parity(parity_text);
  s.counts.assign(static_cast<std::size_t>(s.m) + 1, 0);
  for (int expected = 0; expected <= s.m; ++expected) {
    int x = -1;
    std::string value;
    if (!(in >> x >> value) || x != expected) {
      throw InputError("spectrum line " + std::to_string(expected) + " missing or out of order");
    }
    try {
      s.counts[static_cast<std::size_t>(x)] = BigInt(value);
    } catch (const std::exception&) {
      throw InputError("bad coefficient \"" + value + "\"");
    }
    if (s.counts[static_cast<std::size_t>(x)] < 0 || s.counts[static_cast<std::size_t>(x)] > binomial(s.m, x)) {
      throw InputError("coefficient c_" + std::to_string(x) + " out of range");
    }
  }
  return s;
}

}  // namespace graphcode
