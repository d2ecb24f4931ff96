#include "arq/matrix.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace arq;

namespace {

QMatrix qm(const std::vector<std::vector<int>>& rows) {
  std::vector<QVector> out;
  for (const auto& r : rows) {
    QVector v;
    for (int x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return QMatrix(std::move(out));
}

}  // namespace

TEST_CASE("row_reduce puts a matrix in rref") {
  QMatrix m = qm({{2, 4, -2}, {1, 2, 0}, {3, 6, -1}});
  RowReduction rr = row_reduce(m);
  CHECK(rr.rank == 2);
  CHECK(rr.pivot_cols == std::vector<size_t>{0, 2});
  CHECK(rr.rref[0] == QVector{Rational(1), Rational(2), Rational(0)});
  CHECK(rr.rref[1] == QVector{Rational(0), Rational(0), Rational(1)});
  CHECK(rr.rref[2] == QVector{Rational(0), Rational(0), Rational(0)});

  // rref is a fixed point
  RowReduction again = row_reduce(rr.rref);
  CHECK(again.rref.rows == rr.rref.rows);
}

TEST_CASE("rank_of edge cases") {
  CHECK(rank_of(QMatrix()) == 0);
  CHECK(rank_of(qm({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_of(qm({{1, 0}, {0, 1}})) == 2);
  CHECK(rank_of(qm({{1, 2, 3}})) == 1);
}

TEST_CASE("kernel_vectors spans the null space") {
  QMatrix m = qm({{1, 2, 3}, {2, 4, 6}});
  std::vector<QVector> ker = kernel_vectors(m);
  REQUIRE(ker.size() == 2);
  for (const QVector& v : ker) {
    QVector mv = matvec(m, v);
    for (const Rational& x : mv) CHECK(x.is_zero());
  }
  CHECK(rank_of(kernel_basis(m)) == 2);

  // full-rank square matrix has trivial kernel
  CHECK(kernel_vectors(qm({{1, 1}, {0, 1}})).empty());
}

TEST_CASE("solve finds the exact solution or reports none") {
  QMatrix m = qm({{1, 1}, {1, -1}});
  auto x = solve(m, QVector{Rational(3), Rational(1)});
  REQUIRE(x.has_value());
  CHECK(*x == QVector{Rational(2), Rational(1)});

  QMatrix sing = qm({{1, 1}, {2, 2}});
  CHECK(!solve(sing, QVector{Rational(1), Rational(3)}).has_value());
  // consistent but underdetermined: by contract an error, not a choice
  CHECK_THROWS_AS(solve(sing, QVector{Rational(1), Rational(2)}), std::invalid_argument);
}

TEST_CASE("determinant") {
  CHECK(determinant(qm({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(determinant(qm({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == Rational(24));
  CHECK(determinant(qm({{1, 2}, {2, 4}})) == Rational(0));
  // swapping rows flips the sign
  CHECK(determinant(qm({{3, 4}, {1, 2}})) == Rational(2));
}

TEST_CASE("rank matches the plain-elimination oracle on random matrices") {
  std::mt19937_64 rng(12021);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> dimd(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    const int r = dimd(rng), c = dimd(rng);
    std::vector<QVector> rows(r, QVector(c));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    QMatrix m(rows);
    CHECK(rank_of(m) == test::plain_rank(rows));
    // kernel dimension complements the rank
    CHECK(kernel_vectors(m).size() == static_cast<size_t>(c) - rank_of(m));
  }
}
