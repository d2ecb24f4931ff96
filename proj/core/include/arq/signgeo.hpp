#pragma once

#include "arq/arrangement.hpp"
#include "arq/caps.hpp"
#include "arq/matroid.hpp"
#include "arq/sign_vector.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace arq {

// Chamber of the arrangement: a strict sign pattern together with an
// interior point realizing it (integer coordinates, gcd 1).
struct Chamber {
  SignVector sign;
  QVector witness;
};

// All chambers, sorted by sign word, pairwise distinct.
struct ChamberSet {
  std::vector<Chamber> chambers;

  std::size_t size() const { return chambers.size(); }
};

// sigma[k-1] = |Sigma_k| for k = 1..rank. Always sigma_1 = 2^n, weakly
// decreasing, sigma_rank = chamber count.
struct SigmaChain {
  std::vector<std::uint64_t> sigma;
};

// The sign vectors eps whose open cone H^eps is nonempty, each with a
// verified interior witness. The count equals (-1)^rank chi(-1).
ChamberSet enumerate_chambers(const Arrangement& arr, const Caps& caps = {});

// Chamber patterns of the localized arrangement {H : H in flat}, as
// full-width words supported on flat.mask (bit set = '+'). An independent
// flat admits all 2^|flat| patterns; a rank-2 flat with m >= 3 elements
// has exactly 2m.
std::unordered_set<std::uint64_t> local_chamber_patterns(const Arrangement& arr,
                                                         const Flat& flat,
                                                         const Caps& caps = {});

// |Sigma_k|: sign vectors whose restriction to every rank-k flat is a
// local chamber pattern; equivalently, whose every subcone on at most k+1
// hyperplanes is nonempty. k = 1 gives 2^n; k >= rank gives the chamber
// count.
std::uint64_t count_sigma(const Arrangement& arr, std::size_t k, const Caps& caps = {});

// Sigma_k materialized as sorted sign words; count_sigma(arr, k) entries.
// Intended for test-scale n.
std::vector<std::uint64_t> sigma_members(const Arrangement& arr, std::size_t k,
                                         const Caps& caps = {});

SigmaChain sigma_chain(const Arrangement& arr, const Caps& caps = {});

// sigma_2 == sigma_rank.
bool yoshinaga(const Arrangement& arr, const Caps& caps = {});

}  // namespace arq
