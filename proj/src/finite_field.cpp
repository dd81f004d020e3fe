#include "graphcode/finite_field.hpp"

#include "graphcode/errors.hpp"

#include <string>
#include <utility>

namespace graphcode {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
}

Residue FieldSpec::reduce(long long x) const noexcept {
  const long long m = static_cast<long long>(p_);
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Residue FieldSpec::add(Residue a, Residue b) const noexcept {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p_ ? s - p_ : s);
}

Residue FieldSpec::sub(Residue a, Residue b) const noexcept {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
}

Residue FieldSpec::mul(Residue a, Residue b) const noexcept {
  return static_cast<Residue>((std::uint64_t{a} * b) % p_);
}

Residue FieldSpec::inv(Residue a) const {
  if (a % p_ == 0) throw InputError("zero has no inverse");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1U;
  }
  return static_cast<Residue>(result);
}

std::vector<Eigen::Index> row_reduce(FieldMatrix& m, Eigen::Index pivot_cols, const FieldSpec& f) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < pivot_cols && row < m.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Residue scale = f.inv(m(row, col));
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Residue factor = m(i, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const FieldMatrix& m, const FieldSpec& f) {
  FieldMatrix work = m;
  return static_cast<int>(row_reduce(work, work.cols(), f).size());
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& f) {
  if (a.cols() != b.rows()) throw InputError("dimension mismatch in field product");
  FieldMatrix out = FieldMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

SolveResult solve(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& f) {
  if (a.rows() != b.rows()) throw InputError("solve: row counts differ");
  FieldMatrix aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto pivots = row_reduce(aug, a.cols(), f);
  const auto r = static_cast<Eigen::Index>(pivots.size());

  SolveResult result;
  for (Eigen::Index i = r; i < aug.rows(); ++i) {
    for (Eigen::Index j = a.cols(); j < aug.cols(); ++j) {
      if (aug(i, j) != 0) {
        result.status = SolveStatus::inconsistent;
        return result;
      }
    }
  }
  if (r < a.cols()) {
    result.status = SolveStatus::underdetermined;
    return result;
  }
  // Full column rank: pivot row i is column i.
  result.status = SolveStatus::ok;
  result.solution = aug.block(0, a.cols(), a.cols(), b.cols());
  return result;
}

}  // namespace graphcode
