#pragma once

#include "arq/arrangement.hpp"
#include "arq/numeric.hpp"

#include <cstdint>

namespace arq {

// Answer for "does {x : <b_i, x> > 0 for all i} contain a point?", carrying
// its own proof either way:
//   feasible:  witness x with every <b_i, x> > 0;
//   empty:     multipliers lambda >= 0, sum 1, with sum lambda_i b_i = 0
//              (so any x would give 0 = sum lambda_i <b_i, x> > 0).
// Every answer returned by this module has already been verified exactly
// against the input rows; extraction bugs surface as exceptions, not as
// wrong verdicts.
struct FeasibilityAnswer {
  bool feasible = false;
  QVector witness;       // size dim when feasible, else empty
  QVector multipliers;   // size row-count when empty, else empty
};

// Decides H_S^eps = {x : eps_i <a_i, x> > 0 for all i}. normals and signs
// must have equal positive length, signs in {+1,-1}, normals nonzero and of
// one dimension; violations raise std::invalid_argument. Repeated normals
// with opposing effective sides short-circuit to the two-element
// certificate before any pivoting.
FeasibilityAnswer strict_cone_feasible(const std::vector<QVector>& normals,
                                       const std::vector<int>& signs);

// Same question with the rows pre-multiplied: {x : <b_i, x> > 0}. rows may
// be empty, in which case the zero point witnesses the whole space. This is
// the hot path used by the enumerative engines.
FeasibilityAnswer strict_feasible(const std::vector<ZVector>& rows, std::size_t dim);

// Same question for the sub-arrangement on mask, side eps_bits (bit i set =
// positive side of hyperplane i; bits outside mask ignored). multipliers in
// the answer are indexed by ascending members of mask.
FeasibilityAnswer strict_cone_feasible(const Arrangement& a, std::uint64_t mask,
                                       std::uint64_t eps_bits);

// Recheck an answer from scratch. The solver calls this on every answer
// before returning it; tests call it independently. The certificate checks
// are: multipliers nonnegative, not all zero, exact positive dependence.
bool verify_answer(const std::vector<QVector>& normals, const std::vector<int>& signs,
                   const FeasibilityAnswer& ans);

// Row form; requires the solver's normalization sum(multipliers) = 1.
bool verify_answer(const std::vector<ZVector>& rows, std::size_t dim,
                   const FeasibilityAnswer& ans);

// Independent decision procedure for the same question via Fourier-Motzkin
// elimination. Verdict only, no certificates. Exponential in dim; intended
// for cross-checking the simplex on small instances.
bool strict_feasible_by_elimination(const std::vector<ZVector>& rows, std::size_t dim);

}  // namespace arq
