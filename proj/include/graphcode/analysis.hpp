#pragma once

// Exact deletion spectra, decoding-probability polynomials, minimum decoding
// cuts, the deletion-contraction recurrence and Monte Carlo estimation.

#include "graphcode/bigint.hpp"
#include "graphcode/decodability.hpp"
#include "graphcode/multigraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace graphcode {

struct EnumerationOptions {
  int max_edges = 26;  // exhaustive enumeration visits 2^m subsets
  int threads = 0;     // 0: machine parallelism
};

/// c_x = number of x-edge deletions (over labeled edges) leaving a decodable
/// subgraph, for x = 0..m.
struct DeletionSpectrum {
  int m = 0;
  ParityClass parity = ParityClass::even;
  std::vector<BigInt> counts;  // size m + 1

  /// c_x, zero for x < 0 or x > m.
  [[nodiscard]] BigInt decodable(int x) const;
  /// u_x = C(m, x) - c_x.
  [[nodiscard]] BigInt undecodable(int x) const;

  friend bool operator==(const DeletionSpectrum&, const DeletionSpectrum&) = default;
};

/// P(y, z) = sum_x c_x y^(m-x) z^x.
class DecodingPolynomial {
 public:
  explicit DecodingPolynomial(const DeletionSpectrum& s) : m_(s.m), coefficients_(s.counts) {}

  [[nodiscard]] int degree() const noexcept { return m_; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

  /// Sum of nonnegative terms in long double, so there is no cancellation.
  [[nodiscard]] double operator()(double y, double z) const;
  [[nodiscard]] Rational exact(const Rational& y, const Rational& z) const;

 private:
  int m_;
  std::vector<BigInt> coefficients_;
};

/// Enumerates all 2^m deletion sets. Throws SizeError when m > max_edges.
DeletionSpectrum deletion_spectrum(const MultiGraph& g, ParityClass parity,
                                   const EnumerationOptions& options = {});

/// P(p, 1 - p).
double decoding_probability(const DeletionSpectrum& s, double p);
Rational decoding_probability_exact(const DeletionSpectrum& s, const Rational& p);

struct DCutResult {
  int size = 0;        // b_G
  EdgeIdSet witness;   // lexicographically smallest undecodable deletion of that size
};

/// Scans x = 0, 1, ... over x-subsets in lexicographic edge-id order.
DCutResult min_dcut(const MultiGraph& g, ParityClass parity);

/// Spectrum via deletion-contraction on parallel classes, memoized on a
/// degree-refined relabeling. Falls back to enumeration when no class is
/// reducible (odd parity reduces only on bridges of multiplicity 1).
DeletionSpectrum spectrum_by_recurrence(const MultiGraph& g, ParityClass parity,
                                        const EnumerationOptions& options = {});

struct MonteCarloEstimate {
  double p = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
};

/// Keeps each edge independently with probability p. Deterministic in
/// (seed, trials) regardless of thread count.
MonteCarloEstimate monte_carlo_probability(const MultiGraph& g, ParityClass parity, double p,
                                           std::uint64_t trials, std::uint64_t seed,
                                           int threads = 0);

// "m <m> parity <even|odd>" followed by one "x c_x" line per coefficient.
void write_spectrum(std::ostream& out, const DeletionSpectrum& s);
DeletionSpectrum read_spectrum(std::istream& in);

}  // namespace graphcode
