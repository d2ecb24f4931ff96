#include "arq/matrix.hpp"

#include <stdexcept>

namespace arq {

namespace {

void check_rect(const QMatrix& m) {
  for (const auto& row : m.rows) {
    if (row.size() != m.col_count()) throw std::invalid_argument("ragged matrix");
  }
}

}  // namespace

RowReduction row_reduce(const QMatrix& m) {
  check_rect(m);
  QMatrix a = m;
  const size_t nr = a.row_count(), nc = a.col_count();
  RowReduction out;
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t pivot = row;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a.rows[pivot], a.rows[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (size_t j = col; j < nc; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (size_t j = col; j < nc; ++j) a[i][j] -= f * a[row][j];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.rref = std::move(a);
  return out;
}

size_t rank_of(const QMatrix& m) { return row_reduce(m).rank; }

std::vector<QVector> kernel_vectors(const QMatrix& m) {
  check_rect(m);
  const size_t nc = m.col_count();
  RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(nc, false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (size_t free_col = 0; free_col < nc; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v(nc, Rational(0));
    v[free_col] = 1;
    for (size_t i = 0; i < rr.rank; ++i) {
      v[rr.pivot_cols[i]] = -rr.rref[i][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix kernel_basis(const QMatrix& m) {
  const auto vecs = kernel_vectors(m);
  QMatrix b(m.col_count(), vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < m.col_count(); ++i) b[i][j] = vecs[j][i];
  return b;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& rhs) {
  check_rect(m);
  if (m.row_count() != rhs.size()) throw std::invalid_argument("solve: size mismatch");
  const size_t nc = m.col_count();
  QMatrix aug = m;
  for (size_t i = 0; i < aug.row_count(); ++i) aug[i].push_back(rhs[i]);
  RowReduction rr = row_reduce(aug);
  for (size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivot_cols[i] == nc) return std::nullopt;  // 0 = 1 row: inconsistent
  }
  if (rr.rank < nc) throw std::invalid_argument("solve: underdetermined system");
  QVector x(nc, Rational(0));
  for (size_t i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.rref[i][nc];
  return x;
}

Rational determinant(const QMatrix& m) {
  check_rect(m);
  const size_t n = m.row_count();
  if (n != m.col_count()) throw std::invalid_argument("determinant: not square");
  QMatrix a = m;
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a.rows[pivot], a.rows[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = Rational(1) / a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] * inv;
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

QVector matvec(const QMatrix& m, const QVector& x) {
  QVector out;
  out.reserve(m.row_count());
  for (const auto& row : m.rows) out.push_back(dot(row, x));
  return out;
}

}  // namespace arq
