#pragma once

#include "arq/arrangement.hpp"

#include <cstdint>
#include <optional>

namespace arq {

// Minimal dependent set of normals, with its (unique up to global sign)
// dependence pattern. The canonical representative makes the smallest
// element positive: sum over C of s_i lambda_i a_i = 0 with lambda_i > 0,
// where s_i = +1 iff i is in positive.
struct SignedCircuit {
  std::uint64_t support = 0;   // element mask
  std::uint64_t positive = 0;  // subset of support
  std::vector<std::size_t> elements;  // ascending

  std::size_t size() const { return elements.size(); }
  bool operator==(const SignedCircuit&) const = default;
};

struct Flat {
  std::uint64_t mask = 0;
  std::vector<std::size_t> elements;  // ascending
  std::size_t rank = 0;
};

// Exact rank of the subset of normals selected by mask.
std::size_t subset_rank(const Arrangement& a, std::uint64_t mask);

bool subset_independent(const Arrangement& a, std::uint64_t mask);

// Elements spanned by mask: {e : rank(mask | e) == rank(mask)}.
std::uint64_t closure_of(const Arrangement& a, std::uint64_t mask);

// All circuits, sorted by (size, support mask). Sizes range over
// 3..rank+1: loops and parallel pairs are excluded by the Arrangement
// invariants.
std::vector<SignedCircuit> circuits(const Arrangement& a);

// All flats of the given rank, sorted by mask. k <= rank(a).
std::vector<Flat> flats_of_rank(const Arrangement& a, std::size_t k);

// Flats of every rank 0..kmax in one sweep; index by rank.
std::vector<std::vector<Flat>> flats_by_rank(const Arrangement& a, std::size_t kmax);

// Characteristic polynomial of the underlying matroid, coefficients from
// t^rank down to t^0. The t^(rank-d) coefficient is (-1)^d w_d with w_d
// the number of d-element subsets containing no broken circuit.
std::vector<Int> characteristic_polynomial(const Arrangement& a);

// A circuit C with |C| >= 4 is split by an element h outside C when some
// circuits D1, D2 meet exactly in h and union to C + h; the matroid is
// chordal when every such circuit has a split. witness is a circuit with
// no split when not chordal.
struct ChordalityResult {
  bool chordal = true;
  std::optional<SignedCircuit> witness;
  bool operator==(const ChordalityResult&) const = default;
};

ChordalityResult is_chordal(const Arrangement& a);

}  // namespace arq
