#include "mixvol/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mixvol {

RowEchelon rref(RMat rows, int ncols) {
  RowEchelon out;
  int r = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = 1 / rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(static_cast<std::size_t>(r));
  out.rows = std::move(rows);
  return out;
}

int rank(const RMat& rows, int ncols) {
  return static_cast<int>(rref(rows, ncols).pivots.size());
}

RMat kernel(const RMat& rows, int ncols) {
  const RowEchelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : e.pivots) is_pivot[p] = true;
  RMat basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RVec v = zeros(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

RMat canonical_basis(const RMat& vectors, int ncols) {
  RowEchelon e = rref(vectors, ncols);
  for (auto& row : e.rows) row = primitive(row);
  return e.rows;
}

std::optional<RVec> solve(const RMat& a, const RVec& b) {
  const int n = static_cast<int>(a.empty() ? 0 : a[0].size());
  RMat aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RVec row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const RowEchelon e = rref(aug, n + 1);
  if (static_cast<int>(e.pivots.size()) != n) return std::nullopt;
  for (int p : e.pivots)
    if (p == n) return std::nullopt;
  RVec x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

Rational determinant(RMat m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RMat orthogonal_complement(const RMat& vectors, int ncols) {
  return kernel(vectors, ncols);
}

bool in_span(const RMat& basis, const RVec& v, int ncols) {
  RMat with = basis;
  with.push_back(v);
  return rank(with, ncols) == rank(basis, ncols);
}

}  // namespace mixvol
