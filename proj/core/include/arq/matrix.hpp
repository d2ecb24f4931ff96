#pragma once

#include "arq/numeric.hpp"

#include <cstddef>

namespace arq {

// Dense row-major rational matrix. Rows may be ragged only transiently;
// every function below requires rectangular input.
struct QMatrix {
  std::vector<QVector> rows;

  QMatrix() = default;
  QMatrix(size_t r, size_t c) : rows(r, QVector(c, Rational(0))) {}
  explicit QMatrix(std::vector<QVector> r) : rows(std::move(r)) {}

  size_t row_count() const { return rows.size(); }
  size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
  QVector& operator[](size_t i) { return rows[i]; }
  const QVector& operator[](size_t i) const { return rows[i]; }
};

struct RowReduction {
  QMatrix rref;                     // reduced row echelon form, same shape as input
  std::vector<size_t> pivot_cols;   // strictly increasing
  size_t rank = 0;
};

// Gauss-Jordan over Q. Deterministic: scans columns left to right, takes the
// first nonzero entry below the current row as pivot.
RowReduction row_reduce(const QMatrix& m);

size_t rank_of(const QMatrix& m);

// Basis of {x : m x = 0}, one QVector per kernel dimension, dimension
// col_count - rank. Deterministic given m.
std::vector<QVector> kernel_vectors(const QMatrix& m);

// Same basis packed as the columns of a matrix: m * kernel_basis(m) = 0,
// column count = col_count - rank.
QMatrix kernel_basis(const QMatrix& m);

// Unique solution of m x = rhs when m is square nonsingular; nullopt when
// the system is inconsistent; throws std::invalid_argument when the system
// is underdetermined (solution exists but is not unique).
std::optional<QVector> solve(const QMatrix& m, const QVector& rhs);

// Square matrices only.
Rational determinant(const QMatrix& m);

QVector matvec(const QMatrix& m, const QVector& x);

}  // namespace arq
