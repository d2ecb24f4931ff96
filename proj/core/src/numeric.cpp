#include "arq/numeric.hpp"

#include <limits>

namespace arq {

std::string to_string(const Int& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  size_t i = 0;
  auto read_int = [&]() -> Int {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
    }
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) fail();
    Int value(std::string(text.substr(start, i - start)));
    return neg ? Int(-value) : value;
  };
  Int num = read_int();
  Int den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int();
    if (den == 0) fail();
    if (den < 0) {
      den = -den;
      num = -num;
    }
  }
  if (i != text.size()) fail();
  return Rational(num, den);
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ZVector primitive_integer(const QVector& v) {
  Int lcm_den = 1;
  for (const Rational& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denom(q));
  ZVector out;
  out.reserve(v.size());
  Int g = 0;
  for (const Rational& q : v) {
    Int z = numer(q) * (lcm_den / denom(q));
    g = boost::multiprecision::gcd(g, z);
    out.push_back(std::move(z));
  }
  if (g > 1) {
    for (Int& z : out) z /= g;
  }
  return out;
}

std::optional<std::vector<std::int64_t>> to_int64(const ZVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const Int& z : v) {
    if (z < std::numeric_limits<std::int64_t>::min() ||
        z > std::numeric_limits<std::int64_t>::max()) {
      return std::nullopt;
    }
    out.push_back(static_cast<std::int64_t>(z));
  }
  return out;
}

}  // namespace arq
