#pragma once

#include "arq/arrangement.hpp"
#include "arq/caps.hpp"
#include "arq/field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace arq {

// Graded squarefree model: F[e_1..e_n]/(e_i^2), the degree-d piece spanned
// by the C(n,d) squarefree monomials. The graded ideal J_k is generated by
// the symbols of the empty cones on at most k+1 hyperplanes. Circuit
// symbols alone span J_k: an empty cone carries a circuit pattern on part
// of its support, the circuit symbol times the complementary monomial
// recovers the larger symbol up to monomials divisible by a full circuit,
// and those monomials are themselves products of circuit symbols. The
// engine therefore runs on circuit symbols, while the literal all-cones
// path below is kept as an independent reference.

// Monomial order used throughout the module, on index sets of equal size:
// a precedes b when the lowest index where they differ belongs to a.
// Rows and forms list the lex-greatest (leading) monomial first.
inline bool lex_less_monomial(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

// Homogeneous squarefree form of one degree.
struct SquarefreeForm {
  std::size_t degree = 0;
  // (monomial mask, coefficient), leading monomial first. Coefficients are
  // canonical representatives: integers in [0, p) for F_p, reduced
  // rationals otherwise.
  std::vector<std::pair<std::uint64_t, Rational>> terms;
};

// The generator attached to an empty cone (S = mask, '+' positions =
// plus): the degree-(|S|-1) leading form of the multilinear expansion of
// f(S, eps) - (-1)^{|S|} f(S, -eps), which works out to
//   (-1)^{|neg|} * sum over i in S of eps_i e_{S minus i}.
// Never zero. Throws std::invalid_argument when the cone is nonempty
// (checked through the cone module).
SquarefreeForm symbol(const Arrangement& arr, std::uint64_t mask, std::uint64_t plus,
                      const FieldSpec& field = FieldSpec::rational());

// Dimensions of the degree-d pieces of J_k, d = 0..rank.
std::vector<std::uint64_t> graded_ideal_dims(const Arrangement& arr, std::size_t k,
                                             const FieldSpec& field = FieldSpec::rational(),
                                             const Caps& caps = {});

// Same dimensions from the literal generator sweep (one symbol per empty
// cone on at most k+1 hyperplanes, found by LP). Spans the same ideal;
// exponentially more generators, so test scale only.
std::vector<std::uint64_t> graded_ideal_dims_literal(const Arrangement& arr, std::size_t k,
                                                     const FieldSpec& field = FieldSpec::rational(),
                                                     const Caps& caps = {});

struct CordovilResult {
  // J_2 and J_rank have equal dimensions in every degree 0..rank; above
  // rank both pieces are variable multiples of the rank-degree pieces, so
  // this is full ideal equality.
  bool quadratic = false;
  // Degrees d where J_rank's degree-d piece strictly exceeds the span of
  // (variables) * (degree d-1 piece); the degrees of a minimal generating
  // set. Sorted ascending.
  std::vector<std::size_t> min_generator_degrees;
};

CordovilResult is_cordovil_quadratic(const Arrangement& arr,
                                     const FieldSpec& field = FieldSpec::rational(),
                                     const Caps& caps = {});

// Quadraticity verdict only: compares degrees in ascending order and stops
// at the first difference, so a negative verdict on a large arrangement
// never pays for the high degrees. Agrees with is_cordovil_quadratic.
bool cordovil_quadratic_verdict(const Arrangement& arr,
                                const FieldSpec& field = FieldSpec::rational(),
                                const Caps& caps = {});

// Dimensions of the quotient by J_rank per degree 0..rank: C(n,d) minus
// the ideal dimension. Total equals the chamber count; the degree-d entry
// equals the absolute value of the d-th coefficient of the characteristic
// polynomial.
std::vector<std::uint64_t> hilbert_series(const Arrangement& arr,
                                          const FieldSpec& field = FieldSpec::rational(),
                                          const Caps& caps = {});

// Everything the analysis report needs in one pass (the pieces of J_rank
// are built once and reused for the minimal-degree tests).
struct CordovilReport {
  std::vector<std::uint64_t> dims_quadratic;  // (J_2)_d, d = 0..rank
  std::vector<std::uint64_t> dims_full;       // (J_rank)_d
  std::vector<std::uint64_t> hilbert;         // C(n,d) - dims_full[d]
  bool quadratic = false;
  std::vector<std::size_t> min_generator_degrees;
  FieldSpec field;
  bool operator==(const CordovilReport&) const = default;
};

CordovilReport cordovil_report(const Arrangement& arr,
                               const FieldSpec& field = FieldSpec::rational(),
                               const Caps& caps = {});

}  // namespace arq
