#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arq {

// Resource ceilings for the enumerative engines. Exceeding a cap aborts the
// computation with CapExceeded; partial results are never returned.
struct Caps {
  std::uint64_t chamber_cap = 1'000'000;     // max chambers materialized
  std::uint64_t node_cap = 100'000'000;      // max search tree nodes expanded
};

class CapExceeded : public std::runtime_error {
 public:
  enum class Kind { Chamber, Node };

  CapExceeded(Kind kind, std::uint64_t limit)
      : std::runtime_error(std::string(kind == Kind::Chamber ? "chamber" : "node") +
                           " cap exceeded (limit " + std::to_string(limit) + ")"),
        kind_(kind),
        limit_(limit) {}

  Kind kind() const { return kind_; }
  std::uint64_t limit() const { return limit_; }

 private:
  Kind kind_;
  std::uint64_t limit_;
};

}  // namespace arq
