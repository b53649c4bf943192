#pragma once

// Exact rational linear algebra used throughout: rank, linear solves and
// row-space membership. Dimensions here are tiny (ambient dimension <= ~8),
// so plain fraction arithmetic with Gaussian elimination is the right tool.

#include <optional>

#include "tropimp/numeric.hpp"

namespace tropimp {

// Rank of a set of rational row vectors.
int rank(const QMat& rows);
int rank(const IMat& rows);

// Least structure needed for repeated solves against a fixed row basis:
// expresses targets as rational combinations of the basis rows, or reports
// that a target lies outside the row space.
class RowBasisSolver {
 public:
  explicit RowBasisSolver(const QMat& basis_rows);
  explicit RowBasisSolver(const IMat& basis_rows);

  // Coefficients x with x * basis = target, if target is in the row span.
  std::optional<QVec> solve(const QVec& target) const;
  std::optional<QVec> solve(const IVec& target) const;

  int basis_size() const { return static_cast<int>(rows_.size()); }

 private:
  void init();
  QMat rows_;             // original basis rows
  QMat reduced_;          // row echelon form of rows_
  QMat transform_;        // transform_ * rows_ == reduced_
  std::vector<int> pivot_cols_;
};

// Determinant of a square integer matrix (Bareiss, exact).
Int determinant(const IMat& m);

}  // namespace tropimp
