#pragma once

// Formality of a central essential arrangement.
//
// The relation space of the arrangement is the kernel of the d x n matrix
// whose columns are the normals: the linear dependences among the normals.
// Each rank-2 flat contributes its local relation space, the dependences
// supported on that flat alone, embedded in Q^n by zero padding. The
// arrangement is formal when the local spaces already span the full
// relation space; the defect is the codimension of their span.
//
// formal_closure materializes the span of the local relations: it returns
// the arrangement whose relations are exactly the rank-2-generated ones,
// obtained from the kernel of a basis of that span. A non-formal
// arrangement has strictly fewer relations in the closure, hence strictly
// more chambers.

#include "arq/arrangement.hpp"
#include "arq/numeric.hpp"

#include <cstddef>
#include <vector>

namespace arq {

struct RelationSpaces {
  std::vector<QVector> full;   // basis of all dependences among the normals
  std::vector<QVector> rank2;  // basis of the span of the local dependences
};

RelationSpaces relation_spaces(const Arrangement& arr);

struct FormalityResult {
  bool formal = false;
  std::size_t defect = 0;  // dim(full) - dim(rank2)
  bool operator==(const FormalityResult&) const = default;
};

FormalityResult is_formal(const Arrangement& arr);

// The arrangement with relation space span(rank2). Throws std::runtime_error
// when the closure degenerates (normals collapse or vanish), wrapping the
// arrangement's own diagnostic.
Arrangement formal_closure(const Arrangement& arr);

}  // namespace arq
