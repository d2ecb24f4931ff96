#include "arq/signgeo.hpp"

#include "arq/cone.hpp"
#include "arq/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace arq {

namespace {

Int idot(const ZVector& a, const ZVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZVector negated(ZVector v) {
  for (Int& c : v) c = -c;
  return v;
}

}  // namespace

ChamberSet enumerate_chambers(const Arrangement& arr, const Caps& caps) {
  const std::size_t n = arr.size();
  const std::size_t d = arr.dim();

  struct Partial {
    std::uint64_t bits = 0;
    ZVector w;
  };
  std::vector<Partial> cur;
  cur.push_back({0, ZVector(d, Int(0))});

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Partial> next;
    next.reserve(cur.size() + cur.size() / 2);
    const std::uint64_t bit = std::uint64_t(1) << i;

    for (Partial& p : cur) {
      // Rows of the candidate cone: every already-fixed side, then the new
      // hyperplane. Always assembled from the original normals so that no
      // numeric state compounds across insertions.
      auto side_rows = [&](int side) {
        std::vector<ZVector> rows;
        rows.reserve(i + 1);
        for (std::size_t j = 0; j < i; ++j) {
          const bool pos = (p.bits >> j) & 1;
          rows.push_back(pos ? arr.primitive(j) : negated(arr.primitive(j)));
        }
        rows.push_back(side > 0 ? arr.primitive(i) : negated(arr.primitive(i)));
        return rows;
      };

      const int sg = sign_of(idot(arr.primitive(i), p.w));
      if (sg != 0) {
        // The stored witness already sits strictly on one side; only the
        // opposite side needs a feasibility decision.
        FeasibilityAnswer other = strict_feasible(side_rows(-sg), d);
        next.push_back({p.bits | (sg > 0 ? bit : 0), std::move(p.w)});
        if (other.feasible)
          next.push_back({p.bits | (sg > 0 ? 0 : bit), primitive_integer(other.witness)});
      } else {
        // Witness lies on the new hyperplane, so the open chamber meets
        // both sides and both extensions must be feasible.
        for (const int side : {-1, +1}) {
          FeasibilityAnswer ans = strict_feasible(side_rows(side), d);
          if (!ans.feasible)
            throw std::logic_error("enumerate_chambers: split side reported empty");
          next.push_back({p.bits | (side > 0 ? bit : 0), primitive_integer(ans.witness)});
        }
      }
      if (next.size() > caps.chamber_cap)
        throw CapExceeded(CapExceeded::Kind::Chamber, caps.chamber_cap);
    }
    cur = std::move(next);
  }

  ChamberSet out;
  out.chambers.reserve(cur.size());
  for (Partial& p : cur)
    out.chambers.push_back(
        {SignVector(p.bits, static_cast<std::uint32_t>(n)), to_rational(p.w)});
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.sign < b.sign; });
  return out;
}

std::unordered_set<std::uint64_t> local_chamber_patterns(const Arrangement& arr,
                                                         const Flat& flat,
                                                         const Caps& caps) {
  const std::vector<std::size_t>& el = flat.elements;
  const std::size_t m = el.size();
  if (m == 0) throw std::invalid_argument("local_chamber_patterns: empty flat");
  std::unordered_set<std::uint64_t> out;

  if (m == flat.rank) {
    // Independent flat: the localization is Boolean, every pattern occurs.
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
      std::uint64_t word = 0;
      for (std::size_t j = 0; j < m; ++j)
        if ((s >> j) & 1) word |= std::uint64_t(1) << el[j];
      out.insert(word);
    }
    return out;
  }

  if (flat.rank == 2) {
    // Plane model: with u, v the first two flat normals (independent since
    // normals are pairwise non-proportional), a ~ (<a,u>, <a,v>) embeds the
    // flat's normals into Q^2 preserving proportionality and sign patterns:
    // the point s*u + t*v sees sign <a, p> = <a~, (s,t)>. The localized
    // chambers are then the angular sectors cut by the 2m line directions
    // +-perp(a~), and each sector is sampled at the sum of its two
    // bounding rays (valid: sectors span less than pi once m >= 2).
    const ZVector& u = arr.primitive(el[0]);
    const ZVector& v = arr.primitive(el[1]);
    struct P2 {
      Int x, y;
    };
    std::vector<P2> tilde(m);
    for (std::size_t j = 0; j < m; ++j) {
      tilde[j] = {idot(arr.primitive(el[j]), u), idot(arr.primitive(el[j]), v)};
      if (tilde[j].x == 0 && tilde[j].y == 0)
        throw std::logic_error("local_chamber_patterns: normal orthogonal to its flat");
    }
    std::vector<P2> rays;
    rays.reserve(2 * m);
    for (const P2& t : tilde) {
      rays.push_back({-t.y, t.x});
      rays.push_back({t.y, -t.x});
    }
    const auto half = [](const P2& p) { return p.y > 0 || (p.y == 0 && p.x > 0) ? 0 : 1; };
    std::sort(rays.begin(), rays.end(), [&](const P2& a, const P2& b) {
      const int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      return a.x * b.y - a.y * b.x > 0;
    });
    for (std::size_t t = 0; t < rays.size(); ++t) {
      const P2& w1 = rays[t];
      const P2& w2 = rays[(t + 1) % rays.size()];
      const P2 mid{w1.x + w2.x, w1.y + w2.y};
      std::uint64_t word = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const int s = sign_of(Int(tilde[j].x * mid.x + tilde[j].y * mid.y));
        if (s == 0)
          throw std::logic_error("local_chamber_patterns: sector sample on a line");
        if (s > 0) word |= std::uint64_t(1) << el[j];
      }
      out.insert(word);
    }
    if (out.size() != 2 * m)
      throw std::logic_error("local_chamber_patterns: rank-2 pattern count != 2m");
    return out;
  }

  // Dependent flat of rank >= 3: chambers of the sub-arrangement, lifted
  // back to global positions.
  const ChamberSet cs = enumerate_chambers(arr.subarrangement(flat.mask), caps);
  for (const Chamber& c : cs.chambers) {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (c.sign.at(j) > 0) word |= std::uint64_t(1) << el[j];
    out.insert(word);
  }
  return out;
}

namespace {

// Constraints realizing Sigma_k for 2 <= k < rank: one allowed-pattern set
// per dependent rank-k flat. Independent flats constrain nothing.
std::vector<SetConstraint> sigma_constraints(const Arrangement& arr, std::size_t k,
                                             const Caps& caps) {
  std::vector<SetConstraint> sets;
  for (const Flat& f : flats_of_rank(arr, k))
    if (f.elements.size() > k)
      sets.push_back({f.mask, local_chamber_patterns(arr, f, caps)});
  return sets;
}

}  // namespace

std::uint64_t count_sigma(const Arrangement& arr, std::size_t k, const Caps& caps) {
  if (k < 1) throw std::invalid_argument("count_sigma: k must be >= 1");
  const std::size_t n = arr.size();
  if (k == 1) return std::uint64_t(1) << n;
  if (k >= arr.rank()) return enumerate_chambers(arr, caps).size();
  return count_sign_vectors(n, {}, sigma_constraints(arr, k, caps), caps);
}

std::vector<std::uint64_t> sigma_members(const Arrangement& arr, std::size_t k,
                                         const Caps& caps) {
  if (k < 1) throw std::invalid_argument("sigma_members: k must be >= 1");
  const std::size_t n = arr.size();
  if (k >= arr.rank()) {
    const ChamberSet cs = enumerate_chambers(arr, caps);
    std::vector<std::uint64_t> out;
    out.reserve(cs.size());
    for (const Chamber& c : cs.chambers) out.push_back(c.sign.plus);
    return out;  // chambers are sorted by sign word already
  }
  if (k == 1) return enumerate_sign_vectors(n, {}, {}, caps);
  return enumerate_sign_vectors(n, {}, sigma_constraints(arr, k, caps), caps);
}

SigmaChain sigma_chain(const Arrangement& arr, const Caps& caps) {
  SigmaChain out;
  out.sigma.reserve(arr.rank());
  for (std::size_t k = 1; k <= arr.rank(); ++k)
    out.sigma.push_back(count_sigma(arr, k, caps));
  for (std::size_t k = 1; k < out.sigma.size(); ++k)
    if (out.sigma[k - 1] < out.sigma[k])
      throw std::logic_error("sigma_chain: chain not weakly decreasing");
  return out;
}

bool yoshinaga(const Arrangement& arr, const Caps& caps) {
  if (arr.rank() <= 2) return true;
  return count_sigma(arr, 2, caps) == enumerate_chambers(arr, caps).size();
}

}  // namespace arq
