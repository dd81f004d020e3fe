#pragma once

// Upper bounds on the minimum decoding cut b_G, lower bounds on the
// undecodable counts u_x, exact max-cut, and their verification against
// exact values.

#include "graphcode/analysis.hpp"
#include "graphcode/bigint.hpp"
#include "graphcode/decodability.hpp"
#include "graphcode/multigraph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcode {

struct MaxCutResult {
  int gamma = 0;                // max non-loop edges across a bipartition
  std::vector<VertexId> side;   // one side of a maximizing bipartition
};

/// Brute force over 2^(n-1) bipartitions; SizeError for n > 30.
MaxCutResult max_cut(const MultiGraph& g);

enum class BoundKind {
  upper_b,  // bound >= b_G
  lower_b,  // bound <= b_G
  lower_u,  // bound <= u_x
  lower_count,  // bound <= a structural count
};

struct BoundCheck {
  std::string lemma_id;
  BoundKind kind = BoundKind::upper_b;
  bool hypothesis_ok = false;
  std::string note;      // why a lemma was skipped
  double raw = 0;        // before flooring; may be irrational
  Rational value = 0;    // the bound compared against `exact`
  BigInt exact = 0;
  bool satisfied = true; // vacuously true when the hypothesis fails
};

struct BoundsReport {
  ParityClass parity = ParityClass::even;
  int exact_b = 0;
  std::vector<BoundCheck> checks;

  [[nodiscard]] bool all_satisfied() const noexcept;
};

/// Quantities behind the lower bounds on u_{b_G}.
struct UndecodabilityBoundInputs {
  long long theta = 0;  // b_G (n + 1) + n - 2m
  int alpha = 0;        // vertices with d_I == b_G
  int beta = 0;         // vertices with d_I >= b_G + 2
  int mu = 0;           // max(Omega + 1, Delta_L + 1)
};

UndecodabilityBoundInputs undecodability_inputs(const MultiGraph& g, int exact_b);

/// b_G from a spectrum: the smallest x with u_x > 0.
int min_cut_size(const DeletionSpectrum& s);

/// Every applicable upper bound on b_G (and the lambda lower bound for even
/// parity), compared with the given exact b_G.
BoundsReport b_upper_bounds(const MultiGraph& g, ParityClass parity, int exact_b);
/// As above, computing b_G with min_dcut.
BoundsReport b_upper_bounds(const MultiGraph& g, ParityClass parity);

/// Lower bounds on u_x. The loop-based lemmas apply to even parity; the
/// 2r-regular lemma to odd parity.
std::vector<BoundCheck> u_lower_bounds(const MultiGraph& g, ParityClass parity,
                                       const DeletionSpectrum& exact);

struct VerificationReport {
  std::vector<BoundCheck> checks;  // lemma ids prefixed "even:" / "odd:"
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

/// Exact spectra and both bound suites for both parities.
VerificationReport verify_all(const MultiGraph& g, const EnumerationOptions& options = {});

/// Columns: lemma_id,hypothesis_ok,bound_value,exact_value,satisfied.
void write_bounds_csv(std::ostream& out, const std::vector<BoundCheck>& checks);

std::string format_rational(const Rational& r);

}  // namespace graphcode
