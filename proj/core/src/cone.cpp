#include "arq/cone.hpp"

#include "arq/detail/intops.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

namespace arq {

namespace {

using detail::Ops64;
using detail::OpsBig;
using detail::OverflowSignal;

// The strict cone {x : <b_i,x> > 0} is decided through the positive
// dependence system
//     { lambda >= 0 : sum lambda_i b_i = 0, sum lambda_i = 1 },
// which is solvable exactly when the cone is empty (Gordan). Phase-I
// simplex on that system either produces lambda (the emptiness
// certificate) or terminates with positive infeasibility, whose dual
// vector y satisfies <b_i, y'> + tau <= 0 for all i with tau > 0, so
// x = -y' is a strict witness with margin tau.
//
// Arithmetic is fraction-free integer pivoting: the tableau is kept as
// integers over a common positive denominator g (the previous pivot);
// the two-term pivot update divides exactly by g. Entries are minors of
// the input, so an int64 tableau suffices for small inputs; overflow is
// detected on every operation and escalates to arbitrary precision.

template <class Ops>
FeasibilityAnswer solve_phase1(const std::vector<ZVector>& rows, std::size_t dim) {
  using T = typename Ops::T;
  const std::size_t m = rows.size();       // structural variables lambda_j
  const std::size_t nr = dim + 1;          // equality rows
  const std::size_t cols = m + nr + 1;     // structural | artificial | rhs
  const std::size_t rhs = cols - 1;

  // Constraint rows: sum_j lambda_j b_j[k] = 0 (k < dim), sum_j lambda_j = 1.
  std::vector<std::vector<T>> t(nr, std::vector<T>(cols, T(0)));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < m; ++j) t[k][j] = Ops::from_int(rows[j][k]);
  for (std::size_t j = 0; j < m; ++j) t[dim][j] = T(1);
  for (std::size_t i = 0; i < nr; ++i) t[i][m + i] = T(1);
  t[dim][rhs] = T(1);

  // Objective row: reduced costs of min(sum of artificials) with the
  // artificial basis, scaled by g like everything else.
  std::vector<T> obj(cols, T(0));
  for (std::size_t j = 0; j < m; ++j) {
    T s(0);
    for (std::size_t i = 0; i < nr; ++i) s = Ops::sub(s, t[i][j]);
    obj[j] = s;
  }
  obj[rhs] = T(-1);

  std::vector<std::size_t> basis(nr);
  std::vector<bool> basic(m, false);
  for (std::size_t i = 0; i < nr; ++i) basis[i] = m + i;

  T g(1);
  // Bland's rule terminates; the cap only turns an implementation bug into
  // an exception instead of a hang.
  const std::size_t pivot_limit = 10'000'000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > pivot_limit) throw std::logic_error("cone: pivot limit hit under Bland's rule");

    // Bland: least structural index with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < m; ++j) {
      if (!basic[j] && obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    // Ratio test on positive column entries; ties by least basis index.
    std::size_t leave = nr;
    for (std::size_t i = 0; i < nr; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == nr) {
        leave = i;
        continue;
      }
      const T lhs = Ops::mul(t[i][rhs], t[leave][enter]);
      const T rhsv = Ops::mul(t[leave][rhs], t[i][enter]);
      if (lhs < rhsv || (lhs == rhsv && basis[i] < basis[leave])) leave = i;
    }
    if (leave == nr)
      throw std::logic_error("cone: unbounded phase-1 objective");

    const T piv = t[leave][enter];
    auto update_row = [&](std::vector<T>& row) {
      const T f = row[enter];
      for (std::size_t c = 0; c < cols; ++c)
        row[c] = Ops::div_exact(Ops::sub(Ops::mul(row[c], piv), Ops::mul(f, t[leave][c])), g);
    };
    for (std::size_t i = 0; i < nr; ++i)
      if (i != leave) update_row(t[i]);
    update_row(obj);
    if (basis[leave] < m) basic[basis[leave]] = false;
    basic[enter] = true;
    basis[leave] = enter;
    g = piv;
  }

  FeasibilityAnswer ans;
  if (obj[rhs] == 0) {
    // Optimum 0: the dependence system is solvable, the cone is empty.
    ans.feasible = false;
    ans.multipliers.assign(m, Rational(0));
    for (std::size_t i = 0; i < nr; ++i)
      if (basis[i] < m) ans.multipliers[basis[i]] = Ops::to_rational(t[i][rhs], g);
  } else {
    // Positive optimum: dual vector y_i = 1 - redcost(artificial_i).
    ans.feasible = true;
    QVector y(nr);
    for (std::size_t i = 0; i < nr; ++i) y[i] = Rational(1) - Ops::to_rational(obj[m + i], g);
    ans.witness.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) ans.witness[k] = -y[k];
  }
  return ans;
}

}  // namespace

bool verify_answer(const std::vector<ZVector>& rows, std::size_t dim,
                   const FeasibilityAnswer& ans) {
  if (ans.feasible) {
    if (ans.witness.size() != dim) return false;
    for (const ZVector& b : rows) {
      Rational s = 0;
      for (std::size_t k = 0; k < dim; ++k) s += Rational(b[k]) * ans.witness[k];
      if (s <= 0) return false;
    }
    return true;
  }
  if (ans.multipliers.size() != rows.size()) return false;
  Rational total = 0;
  QVector comb(dim, Rational(0));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const Rational& l = ans.multipliers[j];
    if (l < 0) return false;
    total += l;
    for (std::size_t k = 0; k < dim; ++k) comb[k] += l * Rational(rows[j][k]);
  }
  if (total != 1) return false;
  for (const Rational& c : comb)
    if (c != 0) return false;
  return true;
}

FeasibilityAnswer strict_feasible(const std::vector<ZVector>& rows, std::size_t dim) {
  for (const ZVector& b : rows)
    if (b.size() != dim) throw std::invalid_argument("strict_feasible: row dimension mismatch");

  FeasibilityAnswer ans;
  try {
    ans = solve_phase1<Ops64>(rows, dim);
  } catch (const OverflowSignal&) {
    ans = solve_phase1<OpsBig>(rows, dim);
  }
  if (!verify_answer(rows, dim, ans))
    throw std::logic_error("cone: solver produced an unverifiable answer");
  return ans;
}

FeasibilityAnswer strict_cone_feasible(const Arrangement& a, std::uint64_t mask,
                                       std::uint64_t eps_bits) {
  std::vector<ZVector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    ZVector b = a.primitive(i);
    if (!((eps_bits >> i) & 1))
      for (Int& z : b) z = -z;
    rows.push_back(std::move(b));
  }
  return strict_feasible(rows, a.dim());
}

FeasibilityAnswer strict_cone_feasible(const std::vector<QVector>& normals,
                                       const std::vector<int>& signs) {
  if (normals.empty() || normals.size() != signs.size())
    throw std::invalid_argument("strict_cone_feasible: need equally many normals and signs");
  const std::size_t m = normals.size(), dim = normals[0].size();
  std::vector<ZVector> rows;       // eps_i a_i scaled to primitive integers
  std::vector<Rational> scale;     // row_i = scale_i * (eps_i a_i), scale_i > 0
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("strict_cone_feasible: signs must be +1 or -1");
    if (normals[i].size() != dim)
      throw std::invalid_argument("strict_cone_feasible: inconsistent dimensions");
    ZVector p = primitive_integer(normals[i]);
    std::size_t lead = 0;
    while (lead < dim && p[lead] == 0) ++lead;
    if (lead == dim) throw std::invalid_argument("strict_cone_feasible: zero normal");
    Rational s = Rational(p[lead]) / normals[i][lead];  // primitive = s * normal, s > 0
    if (signs[i] < 0)
      for (Int& z : p) z = -z;
    rows.push_back(std::move(p));
    scale.push_back(std::move(s));
  }

  // Degenerate-pair early exit: rows i, j exactly opposite give the
  // two-element certificate without pivoting.
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      bool opposite = true;
      for (std::size_t k = 0; k < dim && opposite; ++k)
        if (rows[i][k] != -rows[j][k]) opposite = false;
      if (!opposite) continue;
      // scale_i eps_i a_i = -scale_j eps_j a_j; rebalance to the originals.
      FeasibilityAnswer ans;
      ans.feasible = false;
      ans.multipliers.assign(m, Rational(0));
      const Rational wi = scale[i], wj = scale[j];
      ans.multipliers[i] = wi / (wi + wj);
      ans.multipliers[j] = wj / (wi + wj);
      if (!verify_answer(normals, signs, ans))
        throw std::logic_error("cone: degenerate-pair certificate failed verification");
      return ans;
    }
  }

  FeasibilityAnswer ans = strict_feasible(rows, dim);
  if (!ans.feasible) {
    // Multipliers certify the primitive rows; convert to the given normals
    // and renormalize to sum 1.
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      ans.multipliers[i] *= scale[i];
      total += ans.multipliers[i];
    }
    for (Rational& l : ans.multipliers) l /= total;
  }
  if (!verify_answer(normals, signs, ans))
    throw std::logic_error("cone: answer failed verification against original input");
  return ans;
}

bool verify_answer(const std::vector<QVector>& normals, const std::vector<int>& signs,
                   const FeasibilityAnswer& ans) {
  if (normals.empty() || normals.size() != signs.size()) return false;
  const std::size_t m = normals.size(), dim = normals[0].size();
  if (ans.feasible) {
    if (ans.witness.size() != dim) return false;
    for (std::size_t i = 0; i < m; ++i) {
      Rational s = dot(normals[i], ans.witness);
      if (signs[i] < 0) s = -s;
      if (s <= 0) return false;
    }
    return true;
  }
  if (ans.multipliers.size() != m) return false;
  Rational total = 0;
  QVector comb(dim, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& l = ans.multipliers[i];
    if (l < 0) return false;
    total += l;
    for (std::size_t k = 0; k < dim; ++k)
      comb[k] += (signs[i] < 0 ? -l : l) * normals[i][k];
  }
  if (total == 0) return false;
  for (const Rational& c : comb)
    if (c != 0) return false;
  return true;
}

bool strict_feasible_by_elimination(const std::vector<ZVector>& rows, std::size_t dim) {
  auto primitive = [](ZVector v) {
    Int g = 0;
    for (const Int& z : v) g = boost::multiprecision::gcd(g, z);
    if (g > 1)
      for (Int& z : v) z /= g;
    return v;
  };
  auto is_zero = [](const ZVector& v) {
    for (const Int& z : v)
      if (z != 0) return false;
    return true;
  };

  std::set<ZVector> cur;
  for (const ZVector& b : rows) {
    if (b.size() != dim) throw std::invalid_argument("elimination: row dimension mismatch");
    if (is_zero(b)) return false;
    cur.insert(primitive(b));
  }

  for (std::size_t var = dim; var-- > 0;) {
    if (cur.empty()) return true;
    std::vector<ZVector> pos, neg;
    std::set<ZVector> next;
    for (const ZVector& b : cur) {
      const int s = sign_of(b[var]);
      if (s > 0)
        pos.push_back(b);
      else if (s < 0)
        neg.push_back(b);
      else
        next.insert(b);
    }
    // A positive combination of two strict inequalities cancelling var.
    for (const ZVector& p : pos) {
      for (const ZVector& q : neg) {
        ZVector r(dim, Int(0));
        for (std::size_t k = 0; k < dim; ++k) r[k] = p[var] * q[k] - q[var] * p[k];
        if (is_zero(r)) return false;
        next.insert(primitive(std::move(r)));
      }
    }
    cur = std::move(next);
  }
  return cur.empty();
}

}  // namespace arq
