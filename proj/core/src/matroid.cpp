#include "arq/matroid.hpp"

#include "arq/detail/intops.hpp"
#include "arq/matrix.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace arq {

namespace {

template <class Ops>
std::size_t rank_via(const Arrangement& a, std::uint64_t mask) {
  using T = typename Ops::T;
  const std::size_t d = a.dim();
  std::vector<T> m;
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (std::size_t k = 0; k < d; ++k) m.push_back(Ops::from_int(a.primitive(i)[k]));
    ++nrows;
  }
  return detail::bareiss_rank<Ops>(std::move(m), nrows, d);
}

SignedCircuit circuit_from_support(const Arrangement& a, std::uint64_t support) {
  SignedCircuit c;
  c.support = support;
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((support >> i) & 1) c.elements.push_back(i);

  QMatrix m(a.dim(), c.elements.size());
  for (std::size_t j = 0; j < c.elements.size(); ++j) {
    const ZVector& col = a.primitive(c.elements[j]);
    for (std::size_t k = 0; k < a.dim(); ++k) m[k][j] = Rational(col[k]);
  }
  auto kb = kernel_vectors(m);
  if (kb.size() != 1) throw std::logic_error("circuit support has kernel dimension != 1");
  QVector& lambda = kb[0];
  if (lambda[0] < 0)
    for (Rational& q : lambda) q = -q;
  for (std::size_t j = 0; j < c.elements.size(); ++j) {
    const int s = sign_of(lambda[j]);
    if (s == 0) throw std::logic_error("circuit dependence with a zero coefficient");
    if (s > 0) c.positive |= std::uint64_t(1) << c.elements[j];
  }
  return c;
}

}  // namespace

std::size_t subset_rank(const Arrangement& a, std::uint64_t mask) {
  try {
    return rank_via<detail::Ops64>(a, mask);
  } catch (const detail::OverflowSignal&) {
    return rank_via<detail::OpsBig>(a, mask);
  }
}

bool subset_independent(const Arrangement& a, std::uint64_t mask) {
  return subset_rank(a, mask) == std::size_t(std::popcount(mask));
}

std::uint64_t closure_of(const Arrangement& a, std::uint64_t mask) {
  const std::size_t r = subset_rank(a, mask);
  std::uint64_t cl = mask;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if ((mask >> e) & 1) continue;
    if (subset_rank(a, mask | (std::uint64_t(1) << e)) == r) cl |= std::uint64_t(1) << e;
  }
  return cl;
}

std::vector<SignedCircuit> circuits(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<SignedCircuit> out;

  // Layered sweep over independent sets: a candidate I + {e} with every
  // facet independent is either independent (next layer) or a circuit.
  // Generating only with e > max(I) reaches every candidate exactly once,
  // because the facet dropping the maximum is itself independent.
  std::unordered_set<std::uint64_t> layer;
  for (std::size_t i = 0; i < n; ++i) layer.insert(std::uint64_t(1) << i);
  for (std::size_t k = 1; k <= a.rank() && !layer.empty(); ++k) {
    std::unordered_set<std::uint64_t> next;
    for (const std::uint64_t I : layer) {
      const std::size_t mx = 63 - std::countl_zero(I);
      for (std::size_t e = mx + 1; e < n; ++e) {
        const std::uint64_t C = I | (std::uint64_t(1) << e);
        bool facets_ok = true;
        for (std::uint64_t rest = I; rest != 0; rest &= rest - 1) {
          const std::uint64_t f = rest & ~(rest - 1);
          if (!layer.contains(C ^ f)) {
            facets_ok = false;
            break;
          }
        }
        if (!facets_ok) continue;
        if (subset_rank(a, C) == k + 1)
          next.insert(C);
        else
          out.push_back(circuit_from_support(a, C));
      }
    }
    layer = std::move(next);
  }

  std::sort(out.begin(), out.end(), [](const SignedCircuit& x, const SignedCircuit& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.support < y.support;
  });
  return out;
}

std::vector<std::vector<Flat>> flats_by_rank(const Arrangement& a, std::size_t kmax) {
  if (kmax > a.rank()) throw std::invalid_argument("flats_by_rank: k exceeds rank");
  std::vector<std::vector<Flat>> out(kmax + 1);
  // No loops, so the rank-0 flat is empty.
  std::set<std::uint64_t> layer = {0};
  for (std::size_t k = 0;; ++k) {
    out[k].reserve(layer.size());
    for (const std::uint64_t m : layer) {
      Flat f;
      f.mask = m;
      f.rank = k;
      for (std::size_t e = 0; e < a.size(); ++e)
        if ((m >> e) & 1) f.elements.push_back(e);
      out[k].push_back(std::move(f));
    }
    if (k == kmax) break;
    std::set<std::uint64_t> next;
    for (const std::uint64_t m : layer)
      for (std::size_t e = 0; e < a.size(); ++e)
        if (!((m >> e) & 1)) next.insert(closure_of(a, m | (std::uint64_t(1) << e)));
    layer = std::move(next);
  }
  return out;
}

std::vector<Flat> flats_of_rank(const Arrangement& a, std::size_t k) {
  return std::move(flats_by_rank(a, k).back());
}

std::vector<Int> characteristic_polynomial(const Arrangement& a) {
  const std::size_t r = a.rank();
  // Moebius recursion over the full lattice of flats: mu(empty) = 1,
  // mu(F) = -sum of mu(G) over proper subflats G, and
  // chi(t) = sum over flats of mu(F) t^(r - rank F).
  const auto layers = flats_by_rank(a, r);
  std::vector<std::pair<std::uint64_t, Int>> mu;  // (mask, value), rank-ascending
  std::vector<Int> chi(r + 1, Int(0));
  for (std::size_t k = 0; k <= r; ++k) {
    for (const Flat& f : layers[k]) {
      Int value = k == 0 ? Int(1) : Int(0);
      if (k > 0) {
        for (const auto& [gmask, gmu] : mu)
          if ((gmask & ~f.mask) == 0 && gmask != f.mask) value -= gmu;
      }
      chi[r - k] += value;
      mu.emplace_back(f.mask, value);
    }
  }
  // Reorder to leading-coefficient-first: chi[i] currently holds the t^i term.
  std::vector<Int> out(r + 1);
  for (std::size_t i = 0; i <= r; ++i) out[i] = chi[r - i];
  return out;
}

ChordalityResult is_chordal(const Arrangement& a) {
  const auto cs = circuits(a);
  std::unordered_set<std::uint64_t> supports;
  std::vector<std::vector<std::uint64_t>> by_elem(a.size());
  for (const SignedCircuit& c : cs) {
    supports.insert(c.support);
    for (const std::size_t e : c.elements) by_elem[e].push_back(c.support);
  }

  for (const SignedCircuit& c : cs) {
    if (c.size() < 4) continue;
    bool split = false;
    for (std::size_t h = 0; h < a.size() && !split; ++h) {
      if ((c.support >> h) & 1) continue;
      const std::uint64_t hbit = std::uint64_t(1) << h;
      for (const std::uint64_t d1 : by_elem[h]) {
        if ((d1 & ~(c.support | hbit)) != 0) continue;  // d1 not inside c + h
        const std::uint64_t p1 = d1 & ~hbit;
        if (p1 == c.support) continue;  // d2 would be the single element h
        const std::uint64_t d2 = (c.support & ~p1) | hbit;
        if (supports.contains(d2)) {
          split = true;
          break;
        }
      }
    }
    if (!split) return {false, c};
  }
  return {true, std::nullopt};
}

}  // namespace arq
