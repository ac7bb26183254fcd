// Shelling certificates. A verified shelling order of a pure d-complex
// proves it is homotopy equivalent to a wedge of d-spheres, one per facet
// whose entire boundary lies in earlier facets; this pins down the integral
// homology (free, concentrated in the top degree) without any matrix
// elimination. The verifier is independent of how the order was produced,
// so a successful check is a proof regardless of the generator's pedigree.

#pragma once

#include <unordered_map>

#include "cposet/coset.hpp"
#include "cposet/poset.hpp"

namespace cposet {

struct ShellingCertificate {
  bool ok = false;
  int dim = -1;
  size_t facets = 0;
  long long spheres = 0;  // facets with full restriction: wedge summands
  std::string failure;    // empty iff ok
};

namespace detail {

struct SimplexHash {
  size_t operator()(const std::vector<int>& s) const {
    size_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// Verifies that `order` is a shelling of the pure complex `c`: the facet
// list must be exactly the top-dimensional simplices, every simplex must be
// a face of some facet, and each facet must meet the union of its
// predecessors in a nonempty pure codimension-1 subcomplex of its boundary.
inline ShellingCertificate verify_shelling(const SimplicialComplex& c,
                                           const std::vector<std::vector<int>>& order) {
  ShellingCertificate cert;
  cert.dim = c.dimension();
  cert.facets = order.size();
  const int d = cert.dim;
  if (d < 0) {
    cert.failure = "empty complex";
    return cert;
  }
  {
    std::vector<std::vector<int>> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.by_dim[d]) {
      cert.failure = "facet list does not match the top-dimensional simplices";
      return cert;
    }
  }
  const size_t fsz = static_cast<size_t>(d) + 1;

  // m[S] = index of the first facet containing the face S
  std::unordered_map<std::vector<int>, uint32_t, detail::SimplexHash> first;
  first.reserve(4 * c.count(d));
  std::vector<int> sub;
  for (size_t j = 0; j < order.size(); ++j) {
    const auto& f = order[j];
    if (f.size() != fsz) {
      cert.failure = "facet of wrong size (complex not pure?)";
      return cert;
    }
    for (unsigned mask = 1; mask < (1u << fsz); ++mask) {
      sub.clear();
      for (size_t t = 0; t < fsz; ++t)
        if (mask & (1u << t)) sub.push_back(f[t]);
      first.emplace(sub, static_cast<uint32_t>(j));
    }
  }
  for (int k = 0; k < d; ++k)
    for (const auto& s : c.by_dim[k])
      if (!first.count(s)) {
        cert.failure = "complex is not pure: a face lies in no facet";
        return cert;
      }

  for (size_t j = 0; j < order.size(); ++j) {
    const auto& f = order[j];
    // e-bit t: the codimension-1 face omitting vertex t appears earlier
    unsigned emask = 0;
    for (size_t t = 0; t < fsz; ++t) {
      sub.clear();
      for (size_t u = 0; u < fsz; ++u)
        if (u != t) sub.push_back(f[u]);
      if (first.at(sub) < j) emask |= 1u << t;
    }
    bool any_earlier = false;
    const unsigned full = (1u << fsz) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
      sub.clear();
      for (size_t t = 0; t < fsz; ++t)
        if (mask & (1u << t)) sub.push_back(f[t]);
      if (first.at(sub) >= j) continue;
      any_earlier = true;
      if ((~mask & full & emask) == 0) {
        cert.failure = "facet " + std::to_string(j) +
                       ": an earlier face is not covered by an earlier wall";
        return cert;
      }
    }
    if (j > 0 && d >= 1 && !any_earlier) {
      cert.failure = "facet " + std::to_string(j) + ": disjoint from all predecessors";
      return cert;
    }
    if (emask == full) cert.spheres += 1;
  }
  cert.ok = true;
  return cert;
}

// EL shelling order for the order complex of a vector coset poset whose
// collection is closed under intersection and contains the zero subspace:
// the poset is then the proper part of the geometric lattice of flats of
// the affine geometry AG(n, p), and sorting maximal chains lexicographically
// by the minimal-atom labels of their covers (atoms = points, label of
// x < y = least point of y outside x) yields a shelling. The order is
// deterministic; ties are broken by the chains themselves.
inline std::vector<std::vector<int>> coset_el_shelling_order(const VectorCosetPoset& cp,
                                                             const SimplicialComplex& c) {
  const int d = c.dimension();
  if (d < 0) return {};
  const unsigned p = cp.p;
  auto atom_index = [&](const FpVector& v) {
    long long idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
    return idx;
  };
  // least point of coset j not contained in coset i (i = npos: least point
  // of coset j; j = npos: least point of the ambient space outside coset i)
  constexpr size_t kNone = static_cast<size_t>(-1);
  std::map<std::pair<size_t, size_t>, long long> memo;
  auto label = [&](size_t i, size_t j) {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    long long best = -1;
    if (j == kNone) {
      // walk the ambient vectors in atom order; the first miss is the label
      FpVector v(cp.ambient, 0);
      for (long long idx = 0;; ++idx) {
        if (!member(vec_sub(v, cp.rep[i], p), cp.sub[i])) {
          best = idx;
          break;
        }
        for (size_t t = 0; t < v.size(); ++t) {
          if (++v[t] < p) break;
          v[t] = 0;
        }
      }
    } else {
      for (const FpVector& w : enumerate_vectors(cp.sub[j])) {
        FpVector q = vec_add(cp.rep[j], w, p);
        if (i != kNone && member(vec_sub(q, cp.rep[i], p), cp.sub[i])) continue;
        long long idx = atom_index(q);
        if (best < 0 || idx < best) best = idx;
      }
      if (best < 0) throw std::logic_error("coset_el_shelling_order: cover without label");
    }
    memo.emplace(std::make_pair(i, j), best);
    return best;
  };

  std::vector<std::vector<long long>> keys;
  keys.reserve(c.by_dim[d].size());
  for (const auto& f : c.by_dim[d]) {
    std::vector<long long> key;
    key.reserve(f.size() + 1);
    key.push_back(label(kNone, static_cast<size_t>(f[0])));
    for (size_t t = 0; t + 1 < f.size(); ++t)
      key.push_back(label(static_cast<size_t>(f[t]), static_cast<size_t>(f[t + 1])));
    key.push_back(label(static_cast<size_t>(f.back()), kNone));
    keys.push_back(std::move(key));
  }
  std::vector<size_t> idx(keys.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return c.by_dim[d][a] < c.by_dim[d][b];
  });
  std::vector<std::vector<int>> order;
  order.reserve(idx.size());
  for (size_t i : idx) order.push_back(c.by_dim[d][i]);
  return order;
}

}  // namespace cposet
