#pragma once

// Independent reference implementations used only by tests. Everything here
// is deliberately written from definitions, on routes the library does not
// take: ranks by plain rational elimination, the characteristic polynomial
// by subset expansion, sigma counts by per-sign-vector cone checks, graph
// chordality by maximum cardinality search.

#include "arq/arrangement.hpp"
#include "arq/numeric.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace arq::test {

Arrangement make_arr(const std::vector<std::vector<int>>& normals);

// Random arrangement with entries in [-3, 3], normals pairwise
// non-proportional. Deterministic given the engine state.
Arrangement random_arrangement(std::mt19937_64& rng, std::size_t n, std::size_t d);

// Simple graph with the requested number of edges, sampled without
// replacement from all vertex pairs. Vertices are 1-based.
std::vector<std::pair<int, int>> random_graph(std::mt19937_64& rng, int vertices,
                                              int edges);

// Chordality by maximum cardinality search and a direct perfect
// elimination check.
bool graph_chordal(int vertices, const std::vector<std::pair<int, int>>& edges);

// Rank by plain rational Gaussian elimination.
std::size_t plain_rank(const std::vector<QVector>& vecs);

// chi(t) = sum over subsets S of (-1)^|S| t^(rank - rank(S)), coefficients
// from t^rank down to t^0. Matches the layout of
// characteristic_polynomial but shares none of its machinery.
std::vector<Int> whitney_characteristic(const Arrangement& a);

// whitney_numbers[d] = |coefficient of t^(rank-d)|.
std::vector<std::uint64_t> whitney_numbers(const Arrangement& a);

// Horner evaluation of a polynomial given from the top degree down.
Int eval_poly(const std::vector<Int>& coeff_top_down, const Int& x);

// |Sigma_k| from the definition: a sign vector belongs iff every
// restriction to at most k+1 hyperplanes is a nonempty open cone. Cone
// answers are memoized per (subset, local pattern); every sign vector is
// still decided individually.
std::uint64_t brute_sigma(const Arrangement& a, std::size_t k);

}  // namespace arq::test
