#include "tropimp/lattice.hpp"

#include <algorithm>

#include "tropimp/linalg.hpp"

namespace tropimp {

Int content(const IVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

IVec primitive(const IVec& v) {
  Int g = content(v);
  if (g == 0) throw input_error("primitive: zero vector has no direction");
  IVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

HnfResult hermite_normal_form(const IMat& m) {
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows ? m[0].size() : 0;
  HnfResult res;
  res.h = m;
  res.u.assign(nrows, IVec(nrows, Int(0)));
  for (std::size_t i = 0; i < nrows; ++i) res.u[i][i] = 1;

  auto& h = res.h;
  auto& u = res.u;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    // Clear the column below `row` by gcd-style row reductions.
    while (true) {
      std::size_t piv = nrows;
      for (std::size_t r = row; r < nrows; ++r) {
        if (h[r][col] == 0) continue;
        if (piv == nrows || abs(h[r][col]) < abs(h[piv][col])) piv = r;
      }
      if (piv == nrows) break;  // column is zero from `row` down
      std::swap(h[row], h[piv]);
      std::swap(u[row], u[piv]);
      bool cleared = true;
      for (std::size_t r = row + 1; r < nrows; ++r) {
        if (h[r][col] == 0) continue;
        Int q = h[r][col] / h[row][col];  // truncated division
        if (q != 0) {
          for (std::size_t c = 0; c < ncols; ++c) h[r][c] -= q * h[row][c];
          for (std::size_t c = 0; c < nrows; ++c) u[r][c] -= q * u[row][c];
        }
        if (h[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) {
      for (auto& x : h[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < row; ++r) {
      Int q = h[r][col] / h[row][col];
      if (h[r][col] - q * h[row][col] < 0) q -= 1;  // floor division
      if (q != 0) {
        for (std::size_t c = 0; c < ncols; ++c) h[r][c] -= q * h[row][c];
        for (std::size_t c = 0; c < nrows; ++c) u[r][c] -= q * u[row][c];
      }
    }
    ++row;
  }
  return res;
}

bool is_hnf(const IMat& h) {
  int prev_pivot = -1;
  bool seen_zero_row = false;
  for (const auto& row : h) {
    int piv = -1;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) {
        piv = static_cast<int>(c);
        break;
      }
    }
    if (piv < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;   // zero rows must be at the bottom
    if (piv <= prev_pivot) return false;
    if (row[piv] <= 0) return false;
    prev_pivot = piv;
  }
  // Entries above each pivot reduced into [0, pivot).
  int r = 0;
  for (const auto& row : h) {
    int piv = -1;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) { piv = static_cast<int>(c); break; }
    if (piv < 0) break;
    for (int above = 0; above < r; ++above) {
      if (h[above][piv] < 0 || h[above][piv] >= row[piv]) return false;
    }
    ++r;
  }
  return true;
}

IMat integer_kernel(const IMat& m, int cols) {
  // Row-HNF of the transpose: rows of U mapping to zero rows of H form a
  // (saturated) basis of the kernel.
  IMat mt(cols, IVec(m.size(), Int(0)));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (int c = 0; c < cols; ++c) mt[c][r] = m[r][c];
  HnfResult res = hermite_normal_form(mt);
  IMat kernel;
  for (std::size_t r = 0; r < res.h.size(); ++r) {
    if (is_zero(res.h[r])) kernel.push_back(res.u[r]);
  }
  return kernel;
}

IMat saturated_span_lattice(const IMat& rows, int ambient) {
  bool all_zero = true;
  for (const auto& r : rows)
    if (!is_zero(r)) { all_zero = false; break; }
  if (rows.empty() || all_zero)
    throw input_error("saturated_span_lattice: no nonzero vectors given");
  // (ker(rows))^perp cap Z^p is exactly the saturation of the row span.
  IMat ker = integer_kernel(rows, ambient);
  IMat sat = integer_kernel(ker, ambient);
  HnfResult canon = hermite_normal_form(sat);
  IMat basis;
  for (auto& r : canon.h)
    if (!is_zero(r)) basis.push_back(std::move(r));
  return basis;
}

Int lattice_index(const IMat& target, const IMat& sub) {
  if (target.empty()) {
    for (const auto& s : sub)
      if (!is_zero(s)) throw input_error("lattice_index: spans differ");
    return 1;
  }
  RowBasisSolver solver(target);
  const int k = static_cast<int>(target.size());
  IMat coords;
  coords.reserve(sub.size());
  for (const auto& s : sub) {
    auto x = solver.solve(s);
    if (!x) throw input_error("lattice_index: spans differ");
    IVec xi(k);
    for (int i = 0; i < k; ++i) {
      if (denominator((*x)[i]) != 1)
        throw input_error("lattice_index: not a sublattice of the target");
      xi[i] = numerator((*x)[i]);
    }
    coords.push_back(std::move(xi));
  }
  if (rank(coords) != k) throw input_error("lattice_index: spans differ");
  HnfResult res = hermite_normal_form(coords);
  Int idx = 1;
  int row = 0;
  for (int col = 0; col < k; ++col) {
    // full rank: pivot of row `row` sits at column `row`
    idx *= res.h[row][col];
    ++row;
  }
  return idx;
}

IVec solve_unit(const IVec& phi) {
  // Iterated extended gcd across the entries: maintain y with
  // y . phi == gcd(entries seen so far).
  IVec y(phi.size(), Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == 0) continue;
    if (g == 0) {
      g = abs(phi[i]);
      y[i] = phi[i] > 0 ? 1 : -1;
      if (g == 1) break;
      continue;
    }
    Int a = g, b = phi[i];
    Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int r = a - q * b;
      a = b; b = r;
      Int nx = x0 - q * x1; x0 = x1; x1 = nx;
      Int ny = y0 - q * y1; y0 = y1; y1 = ny;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    // a == x0 * g + y0 * phi[i]
    for (auto& c : y) c *= x0;
    y[i] += y0;
    g = a;
    if (g == 1) break;
  }
  if (g != 1) throw input_error("solve_unit: vector is not primitive");
  return y;
}

}  // namespace tropimp
