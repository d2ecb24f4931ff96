#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace arq {

// Full sign pattern on n hyperplanes, n <= 62. Bit i set means +1 on
// hyperplane i; clear means -1. Zero signs never appear here: chambers and
// covector patterns in this library are always strict.
struct SignVector {
  std::uint64_t plus = 0;
  std::uint32_t n = 0;

  SignVector() = default;
  SignVector(std::uint64_t bits, std::uint32_t count) : plus(bits), n(count) {}

  int at(std::size_t i) const { return (plus >> i) & 1 ? +1 : -1; }
  void set(std::size_t i, int s) {
    if (s > 0)
      plus |= std::uint64_t(1) << i;
    else
      plus &= ~(std::uint64_t(1) << i);
  }

  SignVector negated() const {
    const std::uint64_t mask = n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n));
    return SignVector(~plus & mask, n);
  }

  std::string str() const {
    std::string s(n, '-');
    for (std::uint32_t i = 0; i < n; ++i)
      if ((plus >> i) & 1) s[i] = '+';
    return s;
  }

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

}  // namespace arq
