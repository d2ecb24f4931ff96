#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace arq::detail {

inline std::vector<std::size_t> mask_elements(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask; m; m &= m - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

inline std::vector<std::size_t> complement_elements(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!((mask >> i) & 1)) out.push_back(i);
  return out;
}

// Next mask of equal popcount (Gosper); masks of one size ascend.
inline std::uint64_t next_combination(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// Calls fn with every size-t subset of the given elements, scattered to a
// bit mask over their positions; stops early when fn returns false.
template <typename Fn>
void for_each_subset(const std::vector<std::size_t>& elements, std::size_t t, Fn&& fn) {
  const std::size_t cn = elements.size();
  if (t > cn) return;
  if (t == 0) {
    fn(std::uint64_t(0));
    return;
  }
  const std::uint64_t end = std::uint64_t(1) << cn;
  for (std::uint64_t m = (std::uint64_t(1) << t) - 1; m < end; m = next_combination(m)) {
    std::uint64_t scattered = 0;
    for (std::uint64_t b = m; b; b &= b - 1)
      scattered |= std::uint64_t(1) << elements[std::countr_zero(b)];
    if (!fn(scattered)) return;
  }
}

}  // namespace arq::detail
