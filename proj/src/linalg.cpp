#include "tropimp/linalg.hpp"

namespace tropimp {

namespace {

QMat to_qmat(const IMat& rows) {
  QMat q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.push_back(to_qvec(r));
  return q;
}

}  // namespace

int rank(const QMat& rows) {
  QMat m = rows;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

int rank(const IMat& rows) { return rank(to_qmat(rows)); }

RowBasisSolver::RowBasisSolver(const QMat& basis_rows) : rows_(basis_rows) {
  init();
}

RowBasisSolver::RowBasisSolver(const IMat& basis_rows)
    : rows_(to_qmat(basis_rows)) {
  init();
}

void RowBasisSolver::init() {
  reduced_ = rows_;
  const std::size_t n = rows_.size();
  transform_.assign(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) transform_[i][i] = 1;
  if (n == 0) return;
  const std::size_t cols = rows_[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && reduced_[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(reduced_[row], reduced_[piv]);
    std::swap(transform_[row], transform_[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || reduced_[r][col] == 0) continue;
      Rat f = reduced_[r][col] / reduced_[row][col];
      for (std::size_t c = 0; c < cols; ++c) reduced_[r][c] -= f * reduced_[row][c];
      for (std::size_t c = 0; c < n; ++c) transform_[r][c] -= f * transform_[row][c];
    }
    pivot_cols_.push_back(static_cast<int>(col));
    ++row;
  }
  // Basis rows are required to be independent; dependent rows would leave a
  // zero row in reduced_ and any solve against them is refused below.
}

std::optional<QVec> RowBasisSolver::solve(const QVec& target) const {
  const std::size_t n = rows_.size();
  QVec coeff(n, Rat(0));
  QVec residual = target;
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
    const int col = pivot_cols_[i];
    if (residual[col] == 0) continue;
    Rat f = residual[col] / reduced_[i][col];
    for (std::size_t c = 0; c < residual.size(); ++c)
      residual[c] -= f * reduced_[i][c];
    for (std::size_t c = 0; c < n; ++c) coeff[c] += f * transform_[i][c];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeff;
}

std::optional<QVec> RowBasisSolver::solve(const IVec& target) const {
  return solve(to_qvec(target));
}

Int determinant(const IMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace tropimp
