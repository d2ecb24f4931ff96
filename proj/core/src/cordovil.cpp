#include "arq/cordovil.hpp"

#include "arq/cone.hpp"
#include "arq/detail/bitsubsets.hpp"
#include "arq/matroid.hpp"
#include "arq/vg.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace arq {

namespace {

using detail::complement_elements;
using detail::for_each_subset;

struct Gen {
  std::uint64_t mask = 0;
  std::uint64_t plus = 0;
};

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return static_cast<std::uint64_t>(r);
}

// Terms (monomial, +-1) of the symbol of (mask, plus): monomial mask^bit(i)
// with sign (-1)^{|neg|} eps_i. Built with i ascending, which is exactly
// descending lex order (dropping a lower index leaves a greater monomial).
std::vector<std::pair<std::uint64_t, int>> symbol_terms(std::uint64_t mask,
                                                        std::uint64_t plus) {
  const int global = std::popcount(mask ^ plus) % 2 ? -1 : 1;
  std::vector<std::pair<std::uint64_t, int>> terms;
  terms.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::uint64_t m = mask; m; m &= m - 1) {
    const int i = std::countr_zero(m);
    terms.emplace_back(mask ^ (std::uint64_t(1) << i),
                       global * (((plus >> i) & 1) ? 1 : -1));
  }
  return terms;
}

// Sparse row echelon over one graded piece. Rows hold (monomial, value)
// terms with the lex-greatest monomial first; stored pivot rows have
// leading coefficient 1. Work is metered against caps.node_cap.
template <typename Field>
class Echelon {
 public:
  using Value = typename Field::Value;
  using Term = std::pair<std::uint64_t, Value>;
  using Row = std::vector<Term>;

  Echelon(const Field& f, const Caps& caps, std::uint64_t& ops)
      : f_(f), caps_(caps), ops_(ops) {}

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  // true when the row was independent of the pivots seen so far.
  bool insert(Row row) {
    while (!row.empty()) {
      const auto it = lead_.find(row.front().first);
      if (it == lead_.end()) {
        const Value inv = f_.inv(row.front().second);
        for (Term& t : row) t.second = f_.mul(t.second, inv);
        lead_.emplace(row.front().first, rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = reduce(std::move(row), rows_[it->second]);
    }
    return false;
  }

 private:
  // row - c * pivot with c the leading coefficient of row; the leading
  // terms cancel exactly.
  Row reduce(Row row, const Row& pivot) {
    const Value c = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size() - 2);
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (++ops_ > caps_.node_cap) throw CapExceeded(CapExceeded::Kind::Node, caps_.node_cap);
      if (j == pivot.size() ||
          (i < row.size() && lex_less_monomial(pivot[j].first, row[i].first))) {
        out.push_back(row[i++]);
      } else if (i == row.size() || lex_less_monomial(row[i].first, pivot[j].first)) {
        out.emplace_back(pivot[j].first, f_.neg(f_.mul(c, pivot[j].second)));
        ++j;
      } else {
        Value v = f_.sub(row[i].second, f_.mul(c, pivot[j].second));
        if (!f_.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  const Field& f_;
  const Caps& caps_;
  std::uint64_t& ops_;
  std::unordered_map<std::uint64_t, std::size_t> lead_;
  std::vector<Row> rows_;
};

// One graded piece of the ideal spanned by the given symbols. Monomials
// divisible by a generator support are "dead": each is a unit vector of
// the piece (multiply the symbol by one of its own variables), so the
// piece splits as span(dead monomials) + span(the remaining rows with
// dead coordinates dropped), and its dimension is the sum of the two
// parts. Rows whose every monomial is dead contribute nothing.
template <typename Field>
struct Piece {
  std::vector<std::uint64_t> dead;  // sorted
  std::unordered_set<std::uint64_t> dead_set;
  Echelon<Field> ech;

  Piece(const Field& f, const Caps& caps, std::uint64_t& ops) : ech(f, caps, ops) {}
  std::uint64_t dim() const { return dead.size() + ech.rank(); }
};

// Fills the piece of degree d. With abort_above set, returns false as soon
// as the dimension provably exceeds it (the caller only needed to know
// whether the dimensions match).
template <typename Field>
bool build_piece(Piece<Field>& piece, const Field& F, std::size_t n,
                 const std::vector<Gen>& gens, std::size_t d,
                 const std::uint64_t* abort_above) {
  std::unordered_set<std::uint64_t> seen;
  for (const Gen& g : gens) {
    const std::size_t sz = static_cast<std::size_t>(std::popcount(g.mask));
    if (sz > d || !seen.insert(g.mask).second) continue;
    for_each_subset(complement_elements(g.mask, n), d - sz, [&](std::uint64_t m) {
      piece.dead_set.insert(g.mask | m);
      return true;
    });
  }
  piece.dead.assign(piece.dead_set.begin(), piece.dead_set.end());
  std::sort(piece.dead.begin(), piece.dead.end());
  if (abort_above && piece.dim() > *abort_above) return false;

  for (const Gen& g : gens) {
    const std::size_t sz = static_cast<std::size_t>(std::popcount(g.mask));
    if (sz < 1 || sz - 1 > d) continue;
    const auto terms = symbol_terms(g.mask, g.plus);
    bool go_on = true;
    for_each_subset(complement_elements(g.mask, n), d - sz + 1, [&](std::uint64_t m) {
      typename Echelon<Field>::Row row;
      row.reserve(terms.size());
      // OR-ing the same disjoint monomial onto every term preserves the
      // descending lex order of the survivors.
      for (const auto& [mono, c] : terms) {
        const std::uint64_t full = mono | m;
        if (!piece.dead_set.contains(full)) row.emplace_back(full, F.from_int(c));
      }
      if (!row.empty() && piece.ech.insert(std::move(row)) && abort_above &&
          piece.dim() > *abort_above) {
        go_on = false;
        return false;
      }
      return true;
    });
    if (!go_on) return false;
  }
  return true;
}

// Does the ideal need a fresh generator in degree d, given its piece of
// degree d-1 and the symbols of degree d? True iff some symbol escapes
// span(variables * piece(d-1)).
template <typename Field>
bool has_new_generator_at(const Field& F, std::size_t n, const Piece<Field>& prev,
                          const std::vector<Gen>& degree_d_gens, const Caps& caps,
                          std::uint64_t& ops) {
  Echelon<Field> prod(F, caps, ops);
  for (const std::uint64_t t : prev.dead)
    for (std::size_t j = 0; j < n; ++j)
      if (!((t >> j) & 1))
        prod.insert({{t | (std::uint64_t(1) << j), F.one()}});
  for (const auto& row : prev.ech.rows()) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t bit = std::uint64_t(1) << j;
      typename Echelon<Field>::Row out;
      out.reserve(row.size());
      for (const auto& [mono, c] : row)
        if (!(mono & bit)) out.emplace_back(mono | bit, c);
      if (!out.empty()) prod.insert(std::move(out));
    }
  }
  for (const Gen& g : degree_d_gens) {
    typename Echelon<Field>::Row row;
    for (const auto& [mono, c] : symbol_terms(g.mask, g.plus))
      row.emplace_back(mono, F.from_int(c));
    if (prod.insert(std::move(row))) return true;
  }
  return false;
}

std::vector<Gen> circuit_generators(const std::vector<SignedCircuit>& circs,
                                    std::size_t max_size) {
  std::vector<Gen> out;
  for (const SignedCircuit& c : circs)
    if (c.size() <= max_size) out.push_back({c.support, c.positive});
  return out;
}

template <typename Field>
std::vector<std::uint64_t> dims_impl(const Field& F, std::size_t n, std::size_t r,
                                     const std::vector<Gen>& gens, const Caps& caps) {
  std::vector<std::uint64_t> dims;
  dims.reserve(r + 1);
  std::uint64_t ops = 0;
  for (std::size_t d = 0; d <= r; ++d) {
    Piece<Field> piece(F, caps, ops);
    build_piece(piece, F, n, gens, d, nullptr);
    dims.push_back(piece.dim());
  }
  return dims;
}

template <typename Field>
CordovilReport report_impl(const Arrangement& arr, const Field& F, const FieldSpec& spec,
                           const Caps& caps) {
  const std::size_t n = arr.size();
  const std::size_t r = arr.rank();
  const std::vector<SignedCircuit> circs = circuits(arr);
  const std::vector<Gen> gens_full = circuit_generators(circs, r + 1);
  const std::vector<Gen> gens_quad = circuit_generators(circs, 3);

  CordovilReport out;
  out.field = spec;
  std::uint64_t ops = 0;
  std::vector<Piece<Field>> pieces;
  pieces.reserve(r + 1);
  for (std::size_t d = 0; d <= r; ++d) {
    pieces.emplace_back(F, caps, ops);
    build_piece(pieces.back(), F, n, gens_full, d, nullptr);
    out.dims_full.push_back(pieces.back().dim());

    Piece<Field> quad(F, caps, ops);
    build_piece(quad, F, n, gens_quad, d, nullptr);
    out.dims_quadratic.push_back(quad.dim());

    const std::uint64_t all = binomial(n, d);
    if (out.dims_full.back() > all)
      throw std::logic_error("cordovil: ideal piece exceeds the whole degree");
    out.hilbert.push_back(all - out.dims_full.back());
  }
  out.quadratic = out.dims_quadratic == out.dims_full;

  // Minimal generators can only sit in degrees |C|-1: every other piece
  // is variables times the piece below it (dead monomials extend, and
  // every row with a nonempty cofactor monomial factors through it).
  std::set<std::size_t> candidates;
  for (const SignedCircuit& c : circs) candidates.insert(c.size() - 1);
  for (const std::size_t d : candidates) {
    std::vector<Gen> bare;
    for (const SignedCircuit& c : circs)
      if (c.size() == d + 1) bare.push_back({c.support, c.positive});
    if (has_new_generator_at(F, n, pieces[d - 1], bare, caps, ops))
      out.min_generator_degrees.push_back(d);
  }
  return out;
}

template <typename Field>
bool verdict_impl(const Arrangement& arr, const Field& F, const Caps& caps) {
  const std::size_t n = arr.size();
  const std::size_t r = arr.rank();
  const std::vector<SignedCircuit> circs = circuits(arr);
  const std::vector<Gen> gens_full = circuit_generators(circs, r + 1);
  const std::vector<Gen> gens_quad = circuit_generators(circs, 3);
  if (gens_full.size() == gens_quad.size()) return true;

  std::uint64_t ops = 0;
  for (std::size_t d = 2; d <= r; ++d) {
    Piece<Field> quad(F, caps, ops);
    build_piece(quad, F, n, gens_quad, d, nullptr);
    const std::uint64_t limit = quad.dim();
    Piece<Field> full(F, caps, ops);
    if (!build_piece(full, F, n, gens_full, d, &limit)) return false;
    if (full.dim() != limit) return false;
  }
  return true;
}

Rational canonical_value(const FieldQ&, const Rational& v) { return v; }
Rational canonical_value(const FieldP&, std::uint64_t v) { return Rational(v); }

}  // namespace

SquarefreeForm symbol(const Arrangement& arr, std::uint64_t mask, std::uint64_t plus,
                      const FieldSpec& field) {
  if (mask == 0 || (mask & ~arr.full_mask()) != 0)
    throw std::invalid_argument("symbol: support must be a nonempty subset of the arrangement");
  if ((plus & ~mask) != 0)
    throw std::invalid_argument("symbol: sign bits must lie inside the support");
  if (strict_cone_feasible(arr, mask, plus).feasible)
    throw std::invalid_argument("symbol: open cone is nonempty");

  SquarefreeForm out;
  out.degree = static_cast<std::size_t>(std::popcount(mask)) - 1;
  const auto terms = symbol_terms(mask, plus);
  out.terms.reserve(terms.size());
  if (field.kind == FieldSpec::Kind::Rational) {
    const FieldQ F;
    for (const auto& [mono, c] : terms)
      out.terms.emplace_back(mono, canonical_value(F, F.from_int(c)));
  } else {
    const FieldP F(field.p);
    for (const auto& [mono, c] : terms)
      out.terms.emplace_back(mono, canonical_value(F, F.from_int(c)));
  }
  return out;
}

std::vector<std::uint64_t> graded_ideal_dims(const Arrangement& arr, std::size_t k,
                                             const FieldSpec& field, const Caps& caps) {
  if (k < 1) throw std::invalid_argument("graded_ideal_dims: k must be >= 1");
  const std::vector<Gen> gens = circuit_generators(circuits(arr), k + 1);
  if (field.kind == FieldSpec::Kind::Rational)
    return dims_impl(FieldQ{}, arr.size(), arr.rank(), gens, caps);
  return dims_impl(FieldP(field.p), arr.size(), arr.rank(), gens, caps);
}

std::vector<std::uint64_t> graded_ideal_dims_literal(const Arrangement& arr, std::size_t k,
                                                     const FieldSpec& field, const Caps& caps) {
  if (k < 1) throw std::invalid_argument("graded_ideal_dims_literal: k must be >= 1");
  std::vector<Gen> gens;
  for (const IdealGenerator& g : ideal_generators(arr, k)) gens.push_back({g.mask, g.plus});
  if (field.kind == FieldSpec::Kind::Rational)
    return dims_impl(FieldQ{}, arr.size(), arr.rank(), gens, caps);
  return dims_impl(FieldP(field.p), arr.size(), arr.rank(), gens, caps);
}

CordovilResult is_cordovil_quadratic(const Arrangement& arr, const FieldSpec& field,
                                     const Caps& caps) {
  const CordovilReport rep = cordovil_report(arr, field, caps);
  return {rep.quadratic, rep.min_generator_degrees};
}

bool cordovil_quadratic_verdict(const Arrangement& arr, const FieldSpec& field,
                                const Caps& caps) {
  if (field.kind == FieldSpec::Kind::Rational) return verdict_impl(arr, FieldQ{}, caps);
  return verdict_impl(arr, FieldP(field.p), caps);
}

std::vector<std::uint64_t> hilbert_series(const Arrangement& arr, const FieldSpec& field,
                                          const Caps& caps) {
  return cordovil_report(arr, field, caps).hilbert;
}

CordovilReport cordovil_report(const Arrangement& arr, const FieldSpec& field,
                               const Caps& caps) {
  if (field.kind == FieldSpec::Kind::Rational)
    return report_impl(arr, FieldQ{}, field, caps);
  return report_impl(arr, FieldP(field.p), field, caps);
}

}  // namespace arq
