#pragma once

#include "arq/arrangement.hpp"
#include "arq/caps.hpp"
#include "arq/field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arq {

// Heaviside ring of the arrangement, presented on one idempotent generator
// e_i per hyperplane; evaluation at the 2^n points of {0,1}^n (bit i set =
// '+' side) identifies it with a product of 2^n copies of the field, so
// ideals are cut out by their zero sets and quotient dimensions are point
// counts.

// One ideal generator g = f(S, eps) - f(S, -eps), where f(S, eps) is the
// product over i in S of e_i (when eps_i = '+') or 1 - e_i ('-'). Recorded
// by the support S (mask) and the '+' positions of eps (plus, a subset of
// mask); the smallest element of S carries '+', fixing one representative
// of the {eps, -eps} orbit.
struct IdealGenerator {
  std::uint64_t mask = 0;
  std::uint64_t plus = 0;
  std::vector<std::size_t> elements;  // ascending members of mask
};

struct IdealDescription {
  std::vector<IdealGenerator> generators;
  // Sign words where every generator vanishes, sorted ascending. The k-th
  // quotient has one basis indicator per word.
  std::vector<std::uint64_t> zero_set;
};

// All (S, eps) with 3 <= |S| <= min(k+1, rank+1) whose open cone is empty,
// decided by the cone module, one representative per orbit, ordered by
// (|S|, mask, plus). Singletons and pairs never qualify: a half space is
// nonempty and the normals are pairwise non-proportional. The rank+1 bound
// loses nothing: an empty cone restricts to an empty cone on at most
// rank+1 of its hyperplanes.
std::vector<IdealGenerator> ideal_generators(const Arrangement& arr, std::size_t k);

// Generators together with their materialized common zero set. Test scale.
IdealDescription describe_ideal(const Arrangement& arr, std::size_t k, const Caps& caps = {});

// Dimension of the k-th quotient = number of common zeros of the k-th
// ideal. Computed by circuit-pattern avoidance: a sign word vanishes on
// every generator iff no circuit C with |C| <= k+1 matches the word with
// its dependence pattern up to global sign. The value is the same over
// every field; the field argument routes the per-pattern generator
// evaluations through genuine field arithmetic rather than assuming so.
std::uint64_t dim_vg_k(const Arrangement& arr, std::size_t k,
                       const FieldSpec& field = FieldSpec::rational(), const Caps& caps = {});

// dim_vg_k(2) == dim_vg_k(rank): the quadratic part of the ideal already
// cuts the final quotient.
bool is_vg_quadratic(const Arrangement& arr, const FieldSpec& field = FieldSpec::rational(),
                     const Caps& caps = {});

// Plain-text presentation of the k-th quotient for a computer algebra
// system. One statement per line, ASCII:
//   ring e1,...,en
//   relation ei^2 - ei        (one line per variable)
//   generator <polynomial>    (one line per ideal generator)
// Generator polynomials are fully expanded with integer coefficients,
// terms ordered by descending degree then lexicographically by index
// tuple, '*' always explicit, unit coefficients dropped.
std::string export_presentation(const Arrangement& arr, std::size_t k);

// Ring element in the evaluation model: a rational value per point of
// {0,1}^n, sparse over the nonzero points. Arithmetic is pointwise.
// Intended for test-scale cross-checks; constructors refuse supports
// beyond 2^22 points.
class VGElement {
 public:
  VGElement() = default;
  explicit VGElement(std::size_t n) : n_(n) {}

  static VGElement constant(std::size_t n, const Rational& c);
  static VGElement indicator(std::size_t n, std::uint64_t point);
  // The coordinate generator e_i: 1 exactly where bit i is set.
  static VGElement e_plus(std::size_t n, std::size_t i);
  // f(S, eps): 1 exactly where the word agrees with plus on mask.
  static VGElement f_cone(std::size_t n, std::uint64_t mask, std::uint64_t plus);
  // g(S, eps) = f(S, eps) - f(S, -eps).
  static VGElement g_cone(std::size_t n, std::uint64_t mask, std::uint64_t plus);

  std::size_t vars() const { return n_; }
  Rational at(std::uint64_t point) const;
  bool is_zero() const { return values_.empty(); }
  const std::map<std::uint64_t, Rational>& support() const { return values_; }

  VGElement& operator+=(const VGElement& o);
  VGElement& operator-=(const VGElement& o);
  friend VGElement operator+(VGElement a, const VGElement& b) { return a += b; }
  friend VGElement operator-(VGElement a, const VGElement& b) { return a -= b; }
  friend VGElement operator*(const VGElement& a, const VGElement& b);
  friend bool operator==(const VGElement&, const VGElement&) = default;

 private:
  std::size_t n_ = 0;
  std::map<std::uint64_t, Rational> values_;  // absent point = value 0
};

}  // namespace arq
