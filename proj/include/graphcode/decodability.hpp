#pragma once

// Three independent decodability criteria for a received subgraph: the
// structural loop / odd-cycle test, the incidence-matrix rank test, and the
// odd-power trace test on the adjacency matrix.

#include "graphcode/bigint.hpp"
#include "graphcode/finite_field.hpp"
#include "graphcode/multigraph.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace graphcode {

enum class ParityClass { even, odd };

[[nodiscard]] inline ParityClass parity_of(const FieldSpec& f) noexcept {
  return f.is_even_characteristic() ? ParityClass::even : ParityClass::odd;
}

[[nodiscard]] constexpr std::string_view to_string(ParityClass p) noexcept {
  return p == ParityClass::even ? "even" : "odd";
}

/// "even" / "odd"; anything else is an InputError.
ParityClass parse_parity(std::string_view text);

/// m x n, one row per edge in edge order. A loop row has a single 1.
FieldMatrix incidence_matrix(const MultiGraph& g);

/// Symmetric n x n; off-diagonal entries count parallel edges and the
/// diagonal holds d_L(v), so each loop is one closed walk of length 1.
template <typename Scalar>
DenseMatrix<Scalar> adjacency_matrix(const MultiGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (const auto& e : g.edges()) {
    const Eigen::Index u = e.u.index - 1;
    const Eigen::Index v = e.v.index - 1;
    a(u, v) += 1;
    if (u != v) a(v, u) += 1;
  }
  return a;
}

/// Every component has a loop (even) or an odd cycle (odd). Isolated vertices fail.
bool is_decodable_structural(const MultiGraph& h, ParityClass parity);

/// rank(B_H) == n over GF(p).
bool is_decodable_rank(const MultiGraph& h, const FieldSpec& f);

/// Per component U: Tr(A_U^l) > 0 for some odd l <= |V(U)|.
template <typename Scalar = BigInt>
bool is_decodable_trace(const MultiGraph& h) {
  const auto summary = components(h);
  const DenseMatrix<Scalar> full = adjacency_matrix<Scalar>(h);
  for (const auto& comp : summary.components) {
    const auto size = static_cast<Eigen::Index>(comp.vertices.size());
    DenseMatrix<Scalar> a(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < size; ++j) {
        a(i, j) = full(comp.vertices[static_cast<std::size_t>(i)].index - 1,
                       comp.vertices[static_cast<std::size_t>(j)].index - 1);
      }
    }
    const DenseMatrix<Scalar> square = a * a;
    DenseMatrix<Scalar> power = a;
    bool found = false;
    for (Eigen::Index len = 1; len <= size; len += 2) {
      if (power.trace() > 0) {
        found = true;
        break;
      }
      power = DenseMatrix<Scalar>(power * square);
    }
    if (!found) return false;
  }
  return true;
}

/// Decodability of many kept-edge subsets of one graph, by union-find with
/// parity. Holds scratch buffers: give each worker its own instance.
class SubgraphTester {
 public:
  SubgraphTester(const MultiGraph& g, ParityClass parity);

  /// Bit i of `kept` keeps the i-th edge of g (edge order, not id).
  bool decodable(std::uint64_t kept);

  template <typename KeptPredicate>
  bool decodable_if(KeptPredicate&& kept) {
    reset();
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      if (kept(i)) add_edge(i);
    }
    return all_covered();
  }

  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(ends_.size()); }

 private:
  void reset();
  void add_edge(std::size_t i);
  bool all_covered();
  std::pair<int, int> find(int x);

  int n_;
  ParityClass parity_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> parent_;
  std::vector<int> offset_;  // colour parity relative to parent
  std::vector<char> covered_;
};

}  // namespace graphcode
