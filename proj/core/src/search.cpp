#include "arq/search.hpp"

#include <algorithm>
#include <bit>

namespace arq {

namespace {

struct Buckets {
  // Constraint indices triggered when the given position is assigned last.
  std::vector<std::vector<std::size_t>> pair_at;
  std::vector<std::vector<std::size_t>> set_at;
  std::vector<std::size_t> positions;  // constrained positions, ascending
  std::size_t free_count = 0;
};

Buckets bucketize(std::size_t n, const std::vector<PairConstraint>& pairs,
                  const std::vector<SetConstraint>& sets) {
  Buckets b;
  b.pair_at.resize(n);
  b.set_at.resize(n);
  std::uint64_t constrained = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].mask == 0) throw std::invalid_argument("search: empty constraint mask");
    constrained |= pairs[i].mask;
    b.pair_at[63 - std::countl_zero(pairs[i].mask)].push_back(i);
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].mask == 0) throw std::invalid_argument("search: empty constraint mask");
    constrained |= sets[i].mask;
    b.set_at[63 - std::countl_zero(sets[i].mask)].push_back(i);
  }
  for (std::size_t p = 0; p < n; ++p)
    if ((constrained >> p) & 1) b.positions.push_back(p);
  b.free_count = n - b.positions.size();
  return b;
}

}  // namespace

std::uint64_t count_sign_vectors(std::size_t n, const std::vector<PairConstraint>& pairs,
                                 const std::vector<SetConstraint>& sets, const Caps& caps) {
  if (n > 62) throw std::invalid_argument("count_sign_vectors: n > 62");
  const Buckets b = bucketize(n, pairs, sets);
  const std::uint64_t free_factor = std::uint64_t(1) << b.free_count;
  if (b.positions.empty()) return free_factor;

  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  // Depth-first over constrained positions; stack entries carry the partial
  // pattern and the next branch to explore.
  struct Frame {
    std::uint64_t cur;
    int next_branch;  // 0: try '-', 1: try '+', 2: done
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_branch == 2) {
      stack.pop_back();
      continue;
    }
    const std::size_t depth = stack.size() - 1;
    const std::size_t pos = b.positions[depth];
    const std::uint64_t cur =
        f.next_branch == 0 ? f.cur : f.cur | (std::uint64_t(1) << pos);
    ++f.next_branch;

    if (++nodes > caps.node_cap) throw CapExceeded(CapExceeded::Kind::Node, caps.node_cap);
    bool ok = true;
    for (const std::size_t ci : b.pair_at[pos]) {
      const PairConstraint& pc = pairs[ci];
      const std::uint64_t r = cur & pc.mask;
      if (r == pc.a || r == pc.b) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const std::size_t ci : b.set_at[pos]) {
        const SetConstraint& sc = sets[ci];
        if (!sc.allowed.contains(cur & sc.mask)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (depth + 1 == b.positions.size())
      count += free_factor;
    else
      stack.push_back({cur, 0});
  }
  return count;
}

std::vector<std::uint64_t> enumerate_sign_vectors(std::size_t n,
                                                  const std::vector<PairConstraint>& pairs,
                                                  const std::vector<SetConstraint>& sets,
                                                  const Caps& caps) {
  if (n > 62) throw std::invalid_argument("enumerate_sign_vectors: n > 62");
  // Test-scale variant: walk all n positions so free bits are materialized.
  const Buckets b = bucketize(n, pairs, sets);
  const auto& pair_at = b.pair_at;
  const auto& set_at = b.set_at;

  std::vector<std::uint64_t> out;
  std::uint64_t nodes = 0;
  struct Frame {
    std::uint64_t cur;
    int next_branch;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_branch == 2) {
      stack.pop_back();
      continue;
    }
    const std::size_t pos = stack.size() - 1;
    const std::uint64_t cur =
        f.next_branch == 0 ? f.cur : f.cur | (std::uint64_t(1) << pos);
    ++f.next_branch;

    if (++nodes > caps.node_cap) throw CapExceeded(CapExceeded::Kind::Node, caps.node_cap);
    bool ok = true;
    for (const std::size_t ci : pair_at[pos]) {
      const std::uint64_t r = cur & pairs[ci].mask;
      if (r == pairs[ci].a || r == pairs[ci].b) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const std::size_t ci : set_at[pos]) {
        if (!sets[ci].allowed.contains(cur & sets[ci].mask)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (pos + 1 == n)
      out.push_back(cur);
    else
      stack.push_back({cur, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arq
