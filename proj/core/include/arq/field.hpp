#pragma once

#include "arq/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arq {

// Coefficient field selector: the rationals, or a prime field F_p with
// p < 2^32 (so products reduce inside 64 bits).
struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec prime(std::uint64_t p);

  // "q" for the rationals, "fp:<p>" for F_p. Anything else, a composite
  // modulus, or p >= 2^32 throws std::invalid_argument.
  static FieldSpec parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// The concrete fields share an interface by convention: Value, zero(),
// one(), from_int(), add/sub/mul/neg/inv, is_zero. Engines template over
// them, so field arithmetic is inlined with no dispatch on hot paths.
struct FieldQ {
  using Value = Rational;

  Value zero() const { return Rational(0); }
  Value one() const { return Rational(1); }
  Value from_int(long long v) const { return Rational(v); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value inv(const Value& a) const {
    if (a.is_zero()) throw std::domain_error("FieldQ: inverse of zero");
    return 1 / a;
  }
  bool is_zero(const Value& a) const { return a.is_zero(); }
};

struct FieldP {
  using Value = std::uint64_t;
  std::uint64_t p;

  explicit FieldP(std::uint64_t prime) : p(prime) {
    if (p < 2 || p >= (std::uint64_t(1) << 32))
      throw std::invalid_argument("FieldP: modulus out of range");
  }

  Value zero() const { return 0; }
  Value one() const { return 1 % p; }
  Value from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Value>(r);
  }
  Value add(Value a, Value b) const {
    const Value s = a + b;
    return s >= p ? s - p : s;
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + p - b; }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  Value inv(Value a) const {
    if (a == 0) throw std::domain_error("FieldP: inverse of zero");
    long long r0 = static_cast<long long>(p), r1 = static_cast<long long>(a);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long long q = r0 / r1;
      const long long r2 = r0 - q * r1;
      const long long t2 = t0 - q * t1;
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    return from_int(t0);
  }
  bool is_zero(Value a) const { return a == 0; }
};

}  // namespace arq
