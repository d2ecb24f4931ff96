#pragma once

#include "arq/caps.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace arq {

// Backtracking engine over full sign assignments in {+,-}^n, encoded as
// bit patterns (bit i set = '+' on hyperplane i). Constraints restrict the
// assignment on a mask of positions and are checked as soon as the last
// (highest) masked position is assigned; positions in no constraint are
// counted as a free factor of 2 each.

// Restriction to mask must avoid both patterns (a and b are full-width bit
// patterns already aligned to mask; b is typically mask ^ a).
struct PairConstraint {
  std::uint64_t mask = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

// Restriction to mask must be one of the allowed patterns.
struct SetConstraint {
  std::uint64_t mask = 0;
  std::unordered_set<std::uint64_t> allowed;
};

std::uint64_t count_sign_vectors(std::size_t n, const std::vector<PairConstraint>& pairs,
                                 const std::vector<SetConstraint>& sets, const Caps& caps);

// Materializes every satisfying assignment (including free positions);
// sorted ascending. Intended for test-scale n.
std::vector<std::uint64_t> enumerate_sign_vectors(std::size_t n,
                                                  const std::vector<PairConstraint>& pairs,
                                                  const std::vector<SetConstraint>& sets,
                                                  const Caps& caps);

}  // namespace arq
