#pragma once

// Prime-field arithmetic and row reduction over Eigen dense matrices.

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace graphcode {

using Residue = std::uint32_t;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Matrix of residues in 0..p-1.
using FieldMatrix = DenseMatrix<Residue>;

/// GF(p) for a prime p. Only the characteristic matters for decodability of
/// 0/1-coefficient encodings, so extension fields are not modelled.
class FieldSpec {
 public:
  /// Throws InputError unless p is prime and below 2^31.
  explicit FieldSpec(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
  [[nodiscard]] bool is_even_characteristic() const noexcept { return p_ == 2; }

  [[nodiscard]] Residue reduce(long long x) const noexcept;
  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept;
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept;
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept;
  /// Multiplicative inverse of a nonzero residue.
  [[nodiscard]] Residue inv(Residue a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p) noexcept;

/// Gaussian elimination with first-nonzero pivoting, in place, restricted to
/// the first `pivot_cols` columns (all columns are updated). Returns the pivot
/// column of each pivot row, in order; the matrix is left in reduced row
/// echelon form on those columns.
std::vector<Eigen::Index> row_reduce(FieldMatrix& m, Eigen::Index pivot_cols, const FieldSpec& f);

/// Rank over GF(p); the input is not modified.
int rank(const FieldMatrix& m, const FieldSpec& f);

/// Product over GF(p).
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& f);

enum class SolveStatus { ok, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::underdetermined;
  FieldMatrix solution;  // a.cols() x b.cols(); empty unless status == ok
  [[nodiscard]] bool ok() const noexcept { return status == SolveStatus::ok; }
};

/// Unique X with aX = b. An inconsistent system is reported before rank
/// deficiency, since it can only come from corrupted input.
SolveResult solve(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& f);

}  // namespace graphcode
