#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arq {

// Exact arithmetic used everywhere in the library. No floating point
// participates in any decision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// -1, 0, +1
inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

// Canonical invariants: lowest terms, positive denominator. The backend
// maintains both; these accessors expose the canonical pieces.
inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Rational& q);  // "p/q", or "p" when q == 1
std::string to_string(const Int& z);

// Accepts optional sign, decimal integer, optional "/..." denominator.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

using QVector = std::vector<Rational>;
using ZVector = std::vector<Int>;

Rational dot(const QVector& a, const QVector& b);

// Scales a nonzero rational vector to integers with gcd 1; the sign of the
// first nonzero entry is preserved. Zero vectors map to zero vectors.
ZVector primitive_integer(const QVector& v);

inline QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const Int& z : v) out.emplace_back(z);
  return out;
}

// int64 view of an integer vector, for the fast arithmetic paths.
// Empty when any component does not fit.
std::optional<std::vector<std::int64_t>> to_int64(const ZVector& v);

}  // namespace arq
