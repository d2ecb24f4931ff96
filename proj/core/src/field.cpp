#include "arq/field.hpp"

#include <charconv>

namespace arq {

namespace {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q)
    if (v % q == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 32))
    throw std::invalid_argument("field: modulus must be < 2^32, got " + std::to_string(p));
  if (!is_prime(p))
    throw std::invalid_argument("field: modulus must be prime, got " + std::to_string(p));
  FieldSpec out;
  out.kind = Kind::Prime;
  out.p = p;
  return out;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q") return rational();
  constexpr std::string_view kPrefix = "fp:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    const std::string_view digits = text.substr(kPrefix.size());
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw std::invalid_argument("field: bad modulus in '" + std::string(text) + "'");
    return prime(value);
  }
  throw std::invalid_argument("field: expected 'q' or 'fp:<prime>', got '" + std::string(text) +
                              "'");
}

std::string FieldSpec::str() const {
  return kind == Kind::Rational ? "q" : "fp:" + std::to_string(p);
}

}  // namespace arq
