#pragma once

#include "arq/numeric.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

// Shared exact integer arithmetic backends: an int64 fast path whose every
// operation is overflow-checked (overflow raises OverflowSignal so callers
// can restart on arbitrary precision), and the arbitrary-precision path.

namespace arq::detail {

struct OverflowSignal {};

struct Ops64 {
  using T = std::int64_t;
  static T from_int(const Int& z) {
    if (z < std::numeric_limits<T>::min() || z > std::numeric_limits<T>::max())
      throw OverflowSignal{};
    return static_cast<T>(z);
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  // Division known exact by the fraction-free elimination identities; a
  // nonzero remainder means the identity's precondition was broken, so
  // escalate and let the big path decide.
  static T div_exact(T a, T g) {
    if (a % g != 0) throw OverflowSignal{};
    return a / g;
  }
  static Rational to_rational(T a, T g) { return Rational(Int(a), Int(g)); }
};

struct OpsBig {
  using T = Int;
  static T from_int(const Int& z) { return z; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T div_exact(const T& a, const T& g) {
    T q = a / g;
    if (q * g != a) throw std::logic_error("intops: inexact fraction-free division");
    return q;
  }
  static Rational to_rational(const T& a, const T& g) { return Rational(a, g); }
};

// Rank of an integer matrix (rows x cols, row-major) by fraction-free
// Bareiss elimination with row swaps. Exact.
template <class Ops>
std::size_t bareiss_rank(std::vector<typename Ops::T> a, std::size_t nrows,
                         std::size_t ncols) {
  using T = typename Ops::T;
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * ncols + j]; };
  T prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && at(piv, col) == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < ncols; ++j) std::swap(at(piv, j), at(row, j));
    for (std::size_t i = row + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        at(i, j) = Ops::div_exact(
            Ops::sub(Ops::mul(at(row, col), at(i, j)), Ops::mul(at(i, col), at(row, j))),
            prev);
      at(i, col) = T(0);
    }
    prev = at(row, col);
    ++row;
  }
  return row;
}

}  // namespace arq::detail
