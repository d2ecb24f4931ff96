#include "arq/formality.hpp"

#include "arq/matrix.hpp"
#include "arq/matroid.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace arq {

namespace {

// d x n matrix whose columns are the normals of the given elements.
QMatrix normal_columns(const Arrangement& arr, const std::vector<std::size_t>& elements) {
  QMatrix m(arr.dim(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    const QVector& a = arr.normal(elements[j]);
    for (std::size_t i = 0; i < arr.dim(); ++i) m[i][j] = a[i];
  }
  return m;
}

}  // namespace

RelationSpaces relation_spaces(const Arrangement& arr) {
  const std::size_t n = arr.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;

  RelationSpaces out;
  out.full = kernel_vectors(normal_columns(arr, all));

  QMatrix local;
  for (const Flat& f : flats_of_rank(arr, 2)) {
    if (f.elements.size() < 3) continue;
    for (const QVector& k : kernel_vectors(normal_columns(arr, f.elements))) {
      QVector padded(n, Rational(0));
      for (std::size_t j = 0; j < f.elements.size(); ++j) padded[f.elements[j]] = k[j];
      local.rows.push_back(std::move(padded));
    }
  }
  if (!local.rows.empty()) {
    const RowReduction red = row_reduce(local);
    out.rank2.assign(red.rref.rows.begin(), red.rref.rows.begin() + red.rank);
  }
  return out;
}

FormalityResult is_formal(const Arrangement& arr) {
  const RelationSpaces sp = relation_spaces(arr);
  if (sp.rank2.size() > sp.full.size())
    throw std::logic_error("is_formal: local relations exceed the full relation space");
  return {sp.rank2.size() == sp.full.size(), sp.full.size() - sp.rank2.size()};
}

Arrangement formal_closure(const Arrangement& arr) {
  const std::size_t n = arr.size();
  const RelationSpaces sp = relation_spaces(arr);

  std::vector<QVector> normals(n);
  if (sp.rank2.empty()) {
    // No local relations: the closure is the generic arrangement, with
    // standard basis normals.
    for (std::size_t j = 0; j < n; ++j) {
      normals[j].assign(n, Rational(0));
      normals[j][j] = 1;
    }
  } else {
    // New normals are the columns of a kernel basis of span(rank2): the
    // arrangement whose relation space is exactly that span.
    const std::vector<QVector> perp = kernel_vectors(QMatrix(sp.rank2));
    for (std::size_t j = 0; j < n; ++j) {
      normals[j].reserve(perp.size());
      for (const QVector& w : perp) normals[j].push_back(w[j]);
    }
  }

  try {
    return Arrangement(normals);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("formal_closure: degenerate closure: ") + e.what());
  }
}

}  // namespace arq
