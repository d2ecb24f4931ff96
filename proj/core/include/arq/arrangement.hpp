#pragma once

#include "arq/matrix.hpp"
#include "arq/numeric.hpp"

#include <cstdint>

namespace arq {

// Central hyperplane arrangement in Q^d, given by one nonzero normal per
// hyperplane. Hyperplane i is {x : <normal_i, x> = 0}; the normal's
// orientation fixes which side is the + side, so sign data elsewhere in the
// library is always relative to the input orientation.
//
// Invariants enforced at construction:
//   1 <= size <= 62, dim >= 1, every normal nonzero, no two normals
//   proportional (a repeated hyperplane, even with flipped orientation,
//   is rejected rather than deduplicated).
class Arrangement {
 public:
  explicit Arrangement(std::vector<QVector> normals);

  std::size_t size() const { return normals_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }

  const QVector& normal(std::size_t i) const { return normals_[i]; }
  const std::vector<QVector>& normals() const { return normals_; }

  // Integer form of normal i, scaled by a positive rational to primitive
  // integers (gcd 1, orientation preserved).
  const ZVector& primitive(std::size_t i) const { return primitive_[i]; }

  // The sub-arrangement on the hyperplanes in mask, in the same ambient
  // space, in ascending index order.
  Arrangement subarrangement(std::uint64_t mask) const;

  std::uint64_t full_mask() const {
    return size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << size()) - 1;
  }

 private:
  std::vector<QVector> normals_;
  std::vector<ZVector> primitive_;
  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
};

}  // namespace arq
