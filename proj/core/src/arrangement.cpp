#include "arq/arrangement.hpp"

#include <map>
#include <stdexcept>

namespace arq {

namespace {

// Primitive form with the first nonzero entry positive; proportional normals
// (either orientation) collide on this key.
ZVector canonical_key(const ZVector& prim) {
  ZVector key = prim;
  for (const Int& z : key) {
    if (z == 0) continue;
    if (z < 0)
      for (Int& w : key) w = -w;
    break;
  }
  return key;
}

}  // namespace

Arrangement::Arrangement(std::vector<QVector> normals) : normals_(std::move(normals)) {
  if (normals_.empty()) throw std::invalid_argument("arrangement: no hyperplanes");
  if (normals_.size() > 62) throw std::invalid_argument("arrangement: more than 62 hyperplanes");
  dim_ = normals_[0].size();
  if (dim_ == 0) throw std::invalid_argument("arrangement: ambient dimension 0");

  primitive_.reserve(normals_.size());
  std::map<ZVector, std::size_t> seen;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].size() != dim_)
      throw std::invalid_argument("arrangement: inconsistent normal dimensions");
    ZVector prim = primitive_integer(normals_[i]);
    bool zero = true;
    for (const Int& z : prim)
      if (z != 0) zero = false;
    if (zero) throw std::invalid_argument("arrangement: zero normal");
    auto [it, fresh] = seen.emplace(canonical_key(prim), i);
    if (!fresh)
      throw std::invalid_argument("arrangement: normals " + std::to_string(it->second) +
                                  " and " + std::to_string(i) + " are proportional");
    primitive_.push_back(std::move(prim));
  }

  QMatrix m;
  for (const auto& p : primitive_) m.rows.push_back(to_rational(p));
  rank_ = rank_of(m);
}

Arrangement Arrangement::subarrangement(std::uint64_t mask) const {
  std::vector<QVector> sub;
  for (std::size_t i = 0; i < size(); ++i)
    if ((mask >> i) & 1) sub.push_back(normals_[i]);
  return Arrangement(std::move(sub));
}

}  // namespace arq
