#include "arq/vg.hpp"

#include "arq/cone.hpp"
#include "arq/detail/bitsubsets.hpp"
#include "arq/matroid.hpp"
#include "arq/search.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace arq {

namespace {

using detail::mask_elements;
using detail::next_combination;

std::vector<PairConstraint> generator_constraints(const std::vector<IdealGenerator>& gens) {
  std::vector<PairConstraint> pairs;
  pairs.reserve(gens.size());
  for (const IdealGenerator& g : gens) pairs.push_back({g.mask, g.plus, g.mask ^ g.plus});
  return pairs;
}

template <typename Field>
std::uint64_t dim_vg_impl(const Arrangement& arr, std::size_t k, const Field& F,
                          const Caps& caps) {
  std::vector<PairConstraint> pairs;
  for (const SignedCircuit& c : circuits(arr)) {
    if (c.size() > k + 1) continue;
    // Evaluate the circuit's generator at every sign pattern on its
    // support; the patterns where it does not vanish are the forbidden
    // ones. Over any field these are exactly the pattern and its negation.
    std::vector<std::uint64_t> bad;
    for (std::uint64_t t = c.support;; t = (t - 1) & c.support) {
      const auto value = F.sub(F.from_int(t == c.positive ? 1 : 0),
                               F.from_int(t == (c.support ^ c.positive) ? 1 : 0));
      if (!F.is_zero(value)) bad.push_back(t);
      if (t == 0) break;
    }
    if (bad.size() != 2)
      throw std::logic_error("dim_vg_k: circuit generator with unexpected zero pattern");
    std::sort(bad.begin(), bad.end());
    pairs.push_back({c.support, bad[0], bad[1]});
  }
  return count_sign_vectors(arr.size(), pairs, {}, caps);
}

}  // namespace

std::vector<IdealGenerator> ideal_generators(const Arrangement& arr, std::size_t k) {
  if (k < 1) throw std::invalid_argument("ideal_generators: k must be >= 1");
  const std::size_t n = arr.size();
  const std::size_t smax = std::min(k + 1, arr.rank() + 1);
  std::vector<IdealGenerator> out;
  for (std::size_t s = 3; s <= smax; ++s) {
    const std::uint64_t end = std::uint64_t(1) << n;
    for (std::uint64_t mask = (std::uint64_t(1) << s) - 1; mask < end;
         mask = next_combination(mask)) {
      const std::vector<std::size_t> elems = mask_elements(mask);
      const std::uint64_t low = mask & (~mask + 1);
      // One orbit representative per sign pattern: the lowest element is
      // always '+', the other s-1 positions sweep all combinations.
      for (std::uint64_t t = 0; t < (std::uint64_t(1) << (s - 1)); ++t) {
        std::uint64_t plus = low;
        for (std::size_t j = 0; j + 1 < s; ++j)
          if ((t >> j) & 1) plus |= std::uint64_t(1) << elems[j + 1];
        if (!strict_cone_feasible(arr, mask, plus).feasible)
          out.push_back({mask, plus, elems});
      }
    }
  }
  return out;
}

IdealDescription describe_ideal(const Arrangement& arr, std::size_t k, const Caps& caps) {
  IdealDescription out;
  out.generators = ideal_generators(arr, k);
  out.zero_set =
      enumerate_sign_vectors(arr.size(), generator_constraints(out.generators), {}, caps);
  return out;
}

std::uint64_t dim_vg_k(const Arrangement& arr, std::size_t k, const FieldSpec& field,
                       const Caps& caps) {
  if (k < 1) throw std::invalid_argument("dim_vg_k: k must be >= 1");
  if (field.kind == FieldSpec::Kind::Rational) return dim_vg_impl(arr, k, FieldQ{}, caps);
  return dim_vg_impl(arr, k, FieldP(field.p), caps);
}

bool is_vg_quadratic(const Arrangement& arr, const FieldSpec& field, const Caps& caps) {
  return dim_vg_k(arr, 2, field, caps) == dim_vg_k(arr, arr.rank(), field, caps);
}

namespace {

std::string monomial_string(std::uint64_t mask, int coeff) {
  std::string body;
  if (std::abs(coeff) != 1 || mask == 0) body = std::to_string(std::abs(coeff));
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (!body.empty()) body += "*";
    body += "e" + std::to_string(std::countr_zero(m) + 1);
  }
  return body;
}

std::string polynomial_string(const std::vector<std::pair<std::uint64_t, int>>& terms) {
  std::string out;
  for (const auto& [mask, coeff] : terms) {
    if (out.empty())
      out = coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    out += monomial_string(mask, coeff);
  }
  return out;
}

// Multilinear expansion of f(S, plus) - f(S, mask ^ plus) over the
// integers. Terms sorted by descending degree, then by index tuple; ties
// cannot remain because monomial masks are unique keys.
std::vector<std::pair<std::uint64_t, int>> expand_generator(const IdealGenerator& g) {
  std::map<std::uint64_t, int> coeff;
  const auto accumulate = [&](std::uint64_t plus, int outer) {
    // prod e_i (i in plus) * prod (1 - e_j) (j in neg), expanded over the
    // subsets of neg.
    const std::uint64_t neg = g.mask ^ plus;
    for (std::uint64_t t = neg;; t = (t - 1) & neg) {
      coeff[plus | t] += outer * (std::popcount(t) % 2 ? -1 : 1);
      if (t == 0) break;
    }
  };
  accumulate(g.plus, +1);
  accumulate(g.mask ^ g.plus, -1);

  std::vector<std::pair<std::uint64_t, int>> terms;
  for (const auto& [mask, c] : coeff)
    if (c != 0) terms.emplace_back(mask, c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::popcount(a.first), db = std::popcount(b.first);
    if (da != db) return da > db;
    const std::uint64_t diff = a.first ^ b.first;
    return diff != 0 && (a.first & (diff & (~diff + 1))) != 0;
  });
  return terms;
}

}  // namespace

std::string export_presentation(const Arrangement& arr, std::size_t k) {
  const std::size_t n = arr.size();
  std::ostringstream os;
  os << "ring e1";
  for (std::size_t i = 2; i <= n; ++i) os << ",e" << i;
  os << "\n";
  for (std::size_t i = 1; i <= n; ++i) os << "relation e" << i << "^2 - e" << i << "\n";
  for (const IdealGenerator& g : ideal_generators(arr, k))
    os << "generator " << polynomial_string(expand_generator(g)) << "\n";
  return os.str();
}

VGElement VGElement::constant(std::size_t n, const Rational& c) {
  if (c.is_zero()) return VGElement(n);
  VGElement out = f_cone(n, 0, 0);  // 1 at every point
  for (auto& [point, value] : out.values_) value = c;
  return out;
}

Rational VGElement::at(std::uint64_t point) const {
  const auto it = values_.find(point);
  return it == values_.end() ? Rational(0) : it->second;
}

VGElement& VGElement::operator+=(const VGElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("VGElement: mixed variable counts");
  for (const auto& [p, v] : o.values_) {
    const Rational s = at(p) + v;
    if (s.is_zero())
      values_.erase(p);
    else
      values_[p] = s;
  }
  return *this;
}

VGElement& VGElement::operator-=(const VGElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("VGElement: mixed variable counts");
  for (const auto& [p, v] : o.values_) {
    const Rational s = at(p) - v;
    if (s.is_zero())
      values_.erase(p);
    else
      values_[p] = s;
  }
  return *this;
}

VGElement operator*(const VGElement& a, const VGElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("VGElement: mixed variable counts");
  VGElement out(a.n_);
  const VGElement& small = a.values_.size() <= b.values_.size() ? a : b;
  const VGElement& large = a.values_.size() <= b.values_.size() ? b : a;
  for (const auto& [p, v] : small.values_) {
    const Rational w = large.at(p);
    if (!w.is_zero()) out.values_[p] = v * w;
  }
  return out;
}

VGElement VGElement::indicator(std::size_t n, std::uint64_t point) {
  VGElement out(n);
  out.values_[point] = 1;
  return out;
}

VGElement VGElement::e_plus(std::size_t n, std::size_t i) {
  return f_cone(n, std::uint64_t(1) << i, std::uint64_t(1) << i);
}

VGElement VGElement::f_cone(std::size_t n, std::uint64_t mask, std::uint64_t plus) {
  if ((plus & ~mask) != 0) throw std::invalid_argument("VGElement: plus must lie in mask");
  const std::uint64_t word_mask =
      n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  if ((mask & ~word_mask) != 0)
    throw std::invalid_argument("VGElement: mask outside variable range");
  const std::uint64_t free = word_mask & ~mask;
  if (std::popcount(free) > 22) throw std::invalid_argument("VGElement: support too large");
  VGElement out(n);
  for (std::uint64_t t = free;; t = (t - 1) & free) {
    out.values_[plus | t] = 1;
    if (t == 0) break;
  }
  return out;
}

VGElement VGElement::g_cone(std::size_t n, std::uint64_t mask, std::uint64_t plus) {
  return f_cone(n, mask, plus) - f_cone(n, mask, mask ^ plus);
}

}  // namespace arq
