// Coset posets in three flavours, all producing the common Poset type:
//   - vector mode: cosets v + A inside a vector space (or a subspace of it),
//   - Heisenberg mode: cosets (v,t).I of isotropic subgroups of H(V),
//   - group mode: cosets gA over a multiplication-table group model.
// Plus the explicit poset maps: theta_v / s_v, sbar / thetabar, tau-tilde,
// and the reduction map nu-hat.

#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "cposet/group.hpp"
#include "cposet/poset.hpp"
#include "cposet/symplectic.hpp"

namespace cposet {

constexpr size_t kCosetGuard = 100'000;

// --- subspace posets (collections ordered by inclusion) ---

struct SubspacePoset {
  std::vector<Subspace> sub;
  Poset poset;
  std::map<std::vector<FpVector>, size_t> index;

  size_t find(const Subspace& a) const {
    auto it = index.find(a.basis);
    if (it == index.end()) throw std::out_of_range("SubspacePoset: subspace not in poset");
    return it->second;
  }
};

inline SubspacePoset make_subspace_poset(std::vector<Subspace> collection) {
  std::sort(collection.begin(), collection.end(), subspace_less);
  collection.erase(std::unique(collection.begin(), collection.end()), collection.end());
  SubspacePoset sp;
  sp.sub = std::move(collection);
  std::vector<std::string> labels;
  for (size_t i = 0; i < sp.sub.size(); ++i) {
    sp.index[sp.sub[i].basis] = i;
    std::string l = "<";
    for (size_t k = 0; k < sp.sub[i].basis.size(); ++k)
      l += (k ? "," : "") + vector_to_string(sp.sub[i].basis[k]);
    labels.push_back(l + ">");
  }
  sp.poset = make_poset(std::move(labels), [&](size_t i, size_t j) {
    return sp.sub[i].dim() < sp.sub[j].dim() && contains(sp.sub[j], sp.sub[i]);
  });
  return sp;
}

// Proper subspaces of a universe subspace (in ambient coordinates),
// including the zero subspace. With include_zero=false this is the poset
// underlying the Tits building.
inline std::vector<Subspace> proper_subspaces(const Subspace& universe, bool include_zero = true) {
  const unsigned p = universe.p;
  std::vector<Subspace> out;
  if (include_zero) out.push_back(zero_subspace(p, universe.ambient));
  std::vector<Subspace> level = {zero_subspace(p, universe.ambient)};
  for (unsigned d = 1; d + 1 <= universe.dim(); ++d) {
    std::map<std::vector<FpVector>, Subspace> next;
    for (const auto& a : level)
      for (const auto& v : enumerate_vectors(universe)) {
        if (member(v, a)) continue;
        std::vector<FpVector> rows = a.basis;
        rows.push_back(v);
        Subspace cand = canonicalize(p, universe.ambient, std::move(rows));
        next.emplace(cand.basis, cand);
      }
    level.clear();
    for (auto& [key, s] : next) level.push_back(std::move(s));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// F^{vee W} in vector mode: members A with A + W = the universe.
inline std::vector<Subspace> collection_vee(const std::vector<Subspace>& collection,
                                            const Subspace& w, const Subspace& universe) {
  std::vector<Subspace> out;
  for (const auto& a : collection)
    if (span_sum(a, w) == universe) out.push_back(a);
  return out;
}

// F_{wedge U}: members A with A intersect U = 0.
inline std::vector<Subspace> collection_wedge(const std::vector<Subspace>& collection,
                                              const Subspace& u) {
  std::vector<Subspace> out;
  for (const auto& a : collection)
    if (intersect(a, u).dim() == 0) out.push_back(a);
  return out;
}

// --- vector-mode coset posets ---

struct VectorCosetPoset {
  unsigned p = 2, ambient = 0;
  std::vector<Subspace> sub;   // coset direction
  std::vector<FpVector> rep;   // canonical representative (reduce_mod)
  Poset poset;
  std::map<std::pair<std::vector<FpVector>, FpVector>, size_t> index;

  size_t find(const Subspace& a, const FpVector& v) const {
    auto it = index.find({a.basis, reduce_mod(v, a)});
    if (it == index.end()) throw std::out_of_range("VectorCosetPoset: coset not in poset");
    return it->second;
  }
};

// C_U F (or the relative C_{g+W} F when restrict is given): cosets v + A
// with v in the universe U, ordered by set inclusion. The relative poset
// keeps the cosets meeting g + W, i.e. those with g - v in A + W.
struct VectorRestriction {
  FpVector shift;
  Subspace w;
};

inline VectorCosetPoset make_vector_coset_poset(
    const Subspace& universe, const std::vector<Subspace>& collection,
    const std::optional<VectorRestriction>& restrict_to = std::nullopt) {
  const unsigned p = universe.p;
  VectorCosetPoset cp;
  cp.p = p;
  cp.ambient = universe.ambient;
  std::map<std::pair<std::vector<FpVector>, FpVector>, size_t> seen;
  std::vector<std::pair<Subspace, FpVector>> elems;
  for (const auto& a : collection) {
    if (!contains(universe, a)) throw std::invalid_argument("coset poset: collection member outside universe");
    std::optional<Subspace> aw;
    if (restrict_to) aw = span_sum(a, restrict_to->w);
    for (const auto& v : enumerate_vectors(universe)) {
      if (restrict_to && !member(vec_sub(restrict_to->shift, v, p), *aw)) continue;
      FpVector r = reduce_mod(v, a);
      auto key = std::make_pair(a.basis, r);
      if (seen.emplace(key, 0).second) elems.emplace_back(a, std::move(r));
      if (elems.size() > kCosetGuard) throw std::runtime_error("coset poset: guard exceeded");
    }
  }
  std::sort(elems.begin(), elems.end(), [](const auto& x, const auto& y) {
    if (x.first.dim() != y.first.dim()) return x.first.dim() < y.first.dim();
    if (x.first.basis != y.first.basis) return x.first.basis < y.first.basis;
    return x.second < y.second;
  });
  std::vector<std::string> labels;
  for (size_t i = 0; i < elems.size(); ++i) {
    cp.sub.push_back(elems[i].first);
    cp.rep.push_back(elems[i].second);
    cp.index[{elems[i].first.basis, elems[i].second}] = i;
    std::string l = vector_to_string(elems[i].second) + "+<";
    for (size_t k = 0; k < elems[i].first.basis.size(); ++k)
      l += (k ? "," : "") + vector_to_string(elems[i].first.basis[k]);
    labels.push_back(l + ">");
  }
  // v + A subset of w + B  iff  A subset of B and v - w in B
  cp.poset = make_poset(std::move(labels), [&](size_t i, size_t j) {
    return cp.sub[i].dim() < cp.sub[j].dim() && contains(cp.sub[j], cp.sub[i]) &&
           member(vec_sub(cp.rep[i], cp.rep[j], p), cp.sub[j]);
  });
  return cp;
}

// --- Heisenberg-mode coset posets ---

// Cosets (v,t).I in the Heisenberg group of a universe subspace U (with the
// ambient form restricted to U); I runs over a collection of isotropic
// subspaces embedded at central coordinate 0. Canonical form: reduce v mod
// I and slide t accordingly.
struct HeisCosetPoset {
  SymplecticSpace space;
  Subspace universe;
  std::vector<Subspace> sub;
  std::vector<FpVector> rep;
  std::vector<unsigned> rep_t;
  Poset poset;
  std::map<std::tuple<std::vector<FpVector>, FpVector, unsigned>, size_t> index;

  std::pair<FpVector, unsigned> canonical_rep(const FpVector& v, unsigned t,
                                              const Subspace& i) const {
    FpVector v0 = reduce_mod(v, i);
    unsigned t0 = (t + space.form.eval(v, vec_sub(v0, v, space.p()))) % space.p();
    return {std::move(v0), t0};
  }

  size_t find(const Subspace& i, const FpVector& v, unsigned t) const {
    auto [v0, t0] = canonical_rep(v, t, i);
    auto it = index.find({i.basis, v0, t0});
    if (it == index.end()) throw std::out_of_range("HeisCosetPoset: coset not in poset");
    return it->second;
  }
};

// Relative mode: keep cosets meeting (shift_v, *) . H(W), i.e. those whose
// vector parts meet shift_v + W.
struct HeisRestriction {
  FpVector shift_v;
  Subspace w;
};

inline HeisCosetPoset make_heis_coset_poset(
    const SymplecticSpace& space, const Subspace& universe,
    const std::vector<Subspace>& collection,
    const std::optional<HeisRestriction>& restrict_to = std::nullopt) {
  const unsigned p = space.p();
  HeisCosetPoset cp{space, universe};
  std::vector<std::tuple<Subspace, FpVector, unsigned>> elems;
  std::map<std::tuple<std::vector<FpVector>, FpVector, unsigned>, size_t> seen;
  for (const auto& i : collection) {
    if (!is_isotropic(space, i)) throw std::invalid_argument("heis coset poset: non-isotropic member");
    if (!contains(universe, i)) throw std::invalid_argument("heis coset poset: member outside universe");
    std::optional<Subspace> iw;
    if (restrict_to) iw = span_sum(i, restrict_to->w);
    for (const auto& v : enumerate_vectors(universe)) {
      if (restrict_to && !member(vec_sub(restrict_to->shift_v, v, p), *iw)) continue;
      for (unsigned t = 0; t < p; ++t) {
        auto [v0, t0] = cp.canonical_rep(v, t, i);
        auto key = std::make_tuple(i.basis, v0, t0);
        if (seen.emplace(key, 0).second) elems.emplace_back(i, std::move(v0), t0);
        if (elems.size() > kCosetGuard) throw std::runtime_error("heis coset poset: guard exceeded");
      }
    }
  }
  std::sort(elems.begin(), elems.end(), [](const auto& x, const auto& y) {
    const auto& [ax, vx, tx] = x;
    const auto& [ay, vy, ty] = y;
    if (ax.dim() != ay.dim()) return ax.dim() < ay.dim();
    if (ax.basis != ay.basis) return ax.basis < ay.basis;
    return std::tie(vx, tx) < std::tie(vy, ty);
  });
  std::vector<std::string> labels;
  for (size_t k = 0; k < elems.size(); ++k) {
    auto& [a, v, t] = elems[k];
    cp.sub.push_back(a);
    cp.rep.push_back(v);
    cp.rep_t.push_back(t);
    cp.index[{a.basis, v, t}] = k;
    std::string l = "(" + vector_to_string(v) + "," + std::to_string(t) + ")<";
    for (size_t r = 0; r < a.basis.size(); ++r) l += (r ? "," : "") + vector_to_string(a.basis[r]);
    labels.push_back(l + ">");
  }
  // (v0,t0).I subset of (v1,t1).J iff I subset of J, v0-v1 in J, and
  // t0 = t1 + b(v1, v0-v1)
  cp.poset = make_poset(std::move(labels), [&](size_t i, size_t j) {
    if (!(cp.sub[i].dim() < cp.sub[j].dim() && contains(cp.sub[j], cp.sub[i]))) return false;
    FpVector d = vec_sub(cp.rep[i], cp.rep[j], p);
    if (!member(d, cp.sub[j])) return false;
    return cp.rep_t[i] == (cp.rep_t[j] + space.form.eval(cp.rep[j], d)) % p;
  });
  return cp;
}

// --- group-mode coset posets ---

struct GroupCosetPoset {
  const GroupModel* group = nullptr;
  std::vector<SubgroupSet> collection;
  std::vector<uint32_t> sub;   // index into collection
  std::vector<uint16_t> rep;   // canonical (minimal) representative
  Poset poset;
  std::map<std::pair<uint32_t, uint16_t>, size_t> index;

  size_t find(uint32_t subgroup, uint16_t g) const {
    auto it = index.find({subgroup, coset_rep(*group, g, collection[subgroup])});
    if (it == index.end()) throw std::out_of_range("GroupCosetPoset: coset not in poset");
    return it->second;
  }
};

inline GroupCosetPoset make_group_coset_poset(const GroupModel& g,
                                              std::vector<SubgroupSet> collection) {
  std::sort(collection.begin(), collection.end());
  collection.erase(std::unique(collection.begin(), collection.end()), collection.end());
  GroupCosetPoset cp;
  cp.group = &g;
  cp.collection = std::move(collection);
  std::vector<std::pair<uint32_t, uint16_t>> elems;
  for (uint32_t ai = 0; ai < cp.collection.size(); ++ai) {
    std::set<uint16_t> reps;
    for (size_t x = 0; x < g.order; ++x)
      reps.insert(coset_rep(g, static_cast<uint16_t>(x), cp.collection[ai]));
    for (uint16_t r : reps) elems.emplace_back(ai, r);
    if (elems.size() > kCosetGuard) throw std::runtime_error("group coset poset: guard exceeded");
  }
  // collection is sorted by size, so (subgroup, rep) order is a linear extension
  std::vector<std::string> labels;
  for (size_t i = 0; i < elems.size(); ++i) {
    cp.sub.push_back(elems[i].first);
    cp.rep.push_back(elems[i].second);
    cp.index[elems[i]] = i;
    labels.push_back(g.labels[elems[i].second] + ".A" + std::to_string(elems[i].first));
  }
  cp.poset = make_poset(std::move(labels), [&](size_t i, size_t j) {
    if (cp.sub[i] == cp.sub[j]) return false;
    return coset_included(g, cp.rep[i], cp.collection[cp.sub[i]], cp.rep[j],
                          cp.collection[cp.sub[j]]);
  });
  return cp;
}

// F^{vee H} in group mode: members A with A.H = G (H normal).
inline std::vector<SubgroupSet> collection_vee_group(const GroupModel& g,
                                                     const std::vector<SubgroupSet>& collection,
                                                     const SubgroupSet& h) {
  if (!is_normal(g, h)) throw std::invalid_argument("collection_vee_group: H must be normal");
  std::vector<SubgroupSet> out;
  for (const auto& a : collection)
    if (product_set_size(g, a, h) == g.order) out.push_back(a);
  return out;
}

// --- the standard coset posets of the artifact ---

inline HeisCosetPoset coset_poset_HV_IV(const SymplecticSpace& space) {
  return make_heis_coset_poset(space, full_space(space.p(), space.dim()),
                               enumerate_isotropic_all(space));
}

inline VectorCosetPoset coset_poset_V_IV(const SymplecticSpace& space) {
  return make_vector_coset_poset(full_space(space.p(), space.dim()),
                                 enumerate_isotropic_all(space));
}

// --- maps ---

// nu-hat : C_E A(E) -> C_V I(V), xA -> nu(x) + nu(A).
inline PosetMap reduction_map(const GroupCosetPoset& src, const VectorCosetPoset& dst) {
  const GroupModel& g = *src.group;
  if (!g.has_to_V) throw std::invalid_argument("reduction_map: group has no quotient map");
  std::vector<size_t> image;
  for (size_t i = 0; i < src.poset.size(); ++i) {
    const SubgroupSet& a = src.collection[src.sub[i]];
    std::vector<FpVector> rows;
    for (uint16_t m : a.members) rows.push_back(g.to_V[m]);
    Subspace na = canonicalize(g.p, g.vdim, std::move(rows));
    image.push_back(dst.find(na, g.to_V[src.rep[i]]));
  }
  return make_poset_map(src.poset, dst.poset, std::move(image));
}

// q-hat : C_{V'} I(V') -> C_V I(V) induced by the projection along the
// radical (almost extraspecial case).
inline PosetMap radical_projection_map(const VectorCosetPoset& src, const VectorCosetPoset& dst,
                                       const QuotientMap& q) {
  std::vector<size_t> image;
  for (size_t i = 0; i < src.poset.size(); ++i)
    image.push_back(dst.find(q.apply_subspace(src.sub[i]), q.apply(src.rep[i])));
  return make_poset_map(src.poset, dst.poset, std::move(image));
}

// theta_v : T(V)^{vee W} -> C_W T(W), A -> (-v + A) intersect W.
// Returns the coset as (point u, direction A intersect W).
inline std::pair<FpVector, Subspace> theta_v_value(const Subspace& a, const Subspace& w,
                                                   const FpVector& v) {
  const unsigned p = a.p;
  for (const auto& x : enumerate_vectors(a)) {
    FpVector u = vec_sub(x, v, p);
    if (member(u, w)) return {u, intersect(a, w)};
  }
  throw std::logic_error("theta_v: empty intersection (is A + W = V?)");
}

inline PosetMap map_theta_v(const SubspacePoset& src, const VectorCosetPoset& dst,
                            const Subspace& w, const FpVector& v) {
  if (member(v, w)) throw std::invalid_argument("map_theta_v: v must lie outside W");
  std::vector<size_t> image;
  for (size_t i = 0; i < src.poset.size(); ++i) {
    auto [u, b] = theta_v_value(src.sub[i], w, v);
    image.push_back(dst.find(b, u));
  }
  return make_poset_map(src.poset, dst.poset, std::move(image));
}

// s_v : C_W T(W) -> T(V)^{vee W}, w + A -> <v + w, A>.
inline Subspace s_v_value(const Subspace& a, const FpVector& rep, const FpVector& v) {
  std::vector<FpVector> rows = a.basis;
  rows.push_back(vec_add(v, rep, a.p));
  return canonicalize(a.p, a.ambient, std::move(rows));
}

inline PosetMap map_s_v(const VectorCosetPoset& src, const SubspacePoset& dst,
                        const FpVector& v) {
  std::vector<size_t> image;
  for (size_t i = 0; i < src.poset.size(); ++i)
    image.push_back(dst.find(s_v_value(src.sub[i], src.rep[i], v)));
  return make_poset_map(src.poset, dst.poset, std::move(image));
}

// --- sbar / thetabar (the fixed last hyperbolic pair x = x_r, xbar = xbar_r) ---

// Shared geometry for the decomposition of C_{H(V)} I(V) along H(x^perp).
struct HyperbolicSplit {
  SymplecticSpace space;
  FpVector x, xbar;
  Subspace xperp;      // x^perp in V
  Subspace z;          // span of the basis minus {x, xbar}: the model of x^perp/<x>
  // k(u) = u - b(u, xbar) x maps x^perp onto z with kernel <x>
  FpVector k(const FpVector& u) const {
    unsigned c = space.form.eval(u, xbar);
    return vec_sub(u, vec_scale(x, c, space.p()), space.p());
  }
};

inline HyperbolicSplit make_hyperbolic_split(const SymplecticSpace& space) {
  if (space.r < 2) throw std::invalid_argument("hyperbolic split: r >= 2 required");
  if (space.radical_dim != 0) throw std::invalid_argument("hyperbolic split: non-degenerate form required");
  HyperbolicSplit h{space};
  h.x = space.x(space.r);
  h.xbar = space.xbar(space.r);
  h.xperp = perp_of_vector(space, h.x);
  std::vector<FpVector> rows;
  for (unsigned i = 0; i < space.dim(); ++i)
    if (i != space.r - 1 && i != 2 * space.r - 1) rows.push_back(space.basis_vector(i));
  h.z = canonicalize(space.p(), space.dim(), std::move(rows));
  return h;
}

// I(V)^{vee H(x^perp)}: isotropic subspaces A with A + x^perp = V.
inline std::vector<Subspace> isotropic_vee_collection(const HyperbolicSplit& h) {
  return collection_vee(enumerate_isotropic_all(h.space), h.xperp,
                        full_space(h.space.p(), h.space.dim()));
}

// The target C_{H(x^perp/<x>)} I(x^perp/<x>), modelled inside Z.
inline HeisCosetPoset quotient_heis_poset(const HyperbolicSplit& h) {
  std::vector<Subspace> iso;
  for (const auto& i : enumerate_isotropic_all(h.space))
    if (contains(h.z, i)) iso.push_back(i);
  return make_heis_coset_poset(h.space, h.z, iso);
}

// thetabar(A) = ((xbar)^{-1} A  intersect  H(x^perp)) / <x>, computed on the
// subgroup {(a,0) : a in A} and returned as a canonical coset in Z.
inline std::tuple<Subspace, FpVector, unsigned> thetabar_value(const HyperbolicSplit& h,
                                                               const Subspace& a) {
  const unsigned p = h.space.p();
  std::optional<FpVector> rep_v;
  unsigned rep_t = 0;
  for (const auto& av : enumerate_vectors(a)) {
    // (xbar,0)^{-1} (av,0) = (av - xbar, -b(xbar, av)); keep it when the
    // vector part lies in x^perp
    FpVector u = vec_sub(av, h.xbar, p);
    if (!member(u, h.xperp)) continue;
    rep_v = h.k(u);
    rep_t = fp_neg(h.space.form.eval(h.xbar, av), p);
    break;
  }
  if (!rep_v) throw std::logic_error("thetabar: A + x^perp != V");
  Subspace axp = intersect(a, h.xperp);
  std::vector<FpVector> rows;
  for (const auto& r : axp.basis) rows.push_back(h.k(r));
  Subspace img = canonicalize(p, h.space.dim(), std::move(rows));
  return {std::move(img), std::move(*rep_v), rep_t};
}

inline PosetMap map_thetabar(const HyperbolicSplit& h, const SubspacePoset& src,
                             const HeisCosetPoset& dst) {
  std::vector<size_t> image;
  for (size_t i = 0; i < src.poset.size(); ++i) {
    auto [sub, v, t] = thetabar_value(h, src.sub[i]);
    image.push_back(dst.find(sub, v, t));
  }
  return make_poset_map(src.poset, dst.poset, std::move(image));
}

// sbar((w,t).A) = < xbar + t x + w,  b(w,a) x + a : a in A >.
inline Subspace sbar_value(const HyperbolicSplit& h, const Subspace& a, const FpVector& w,
                           unsigned t) {
  const unsigned p = h.space.p();
  std::vector<FpVector> rows;
  rows.push_back(vec_add(h.xbar, vec_add(vec_scale(h.x, t, p), w, p), p));
  for (const auto& g : a.basis)
    rows.push_back(vec_add(vec_scale(h.x, h.space.form.eval(w, g), p), g, p));
  Subspace s = canonicalize(p, h.space.dim(), std::move(rows));
  if (!is_isotropic(h.space, s)) throw std::logic_error("sbar: image not isotropic");
  return s;
}

inline PosetMap map_sbar(const HyperbolicSplit& h, const HeisCosetPoset& src,
                         const SubspacePoset& dst) {
  std::vector<size_t> image;
  for (size_t i = 0; i < src.poset.size(); ++i)
    image.push_back(dst.find(sbar_value(h, src.sub[i], src.rep[i], src.rep_t[i])));
  return make_poset_map(src.poset, dst.poset, std::move(image));
}

// thetabar_H(A) = (A intersect H(x^perp)) / <x> as a coset (no xbar shift);
// used to check that thetabar_H . sbar lands in cosets containing the
// identity element.
inline std::tuple<Subspace, FpVector, unsigned> thetabar_H_value(const HyperbolicSplit& h,
                                                                 const Subspace& a) {
  Subspace axp = intersect(a, h.xperp);
  std::vector<FpVector> rows;
  for (const auto& r : axp.basis) rows.push_back(h.k(r));
  Subspace img = canonicalize(h.space.p(), h.space.dim(), std::move(rows));
  return {std::move(img), vec_zero(h.space.dim()), 0};
}

// --- sphere_J and tau-tilde ---

// The (r+1)-fold join {x,xbar} * {x_1,xbar_1} * ... * {x_r,xbar_r} with
// x = sum (x_i + xbar_i) and xbar = 0; the nerve triangulates S^r.
struct SphereJ {
  Poset poset;
  std::vector<FpVector> vertex_vector;
};

inline SphereJ sphere_J(const SymplecticSpace& space) {
  const unsigned p = space.p(), r = space.r;
  SphereJ s;
  std::vector<std::string> labels;
  FpVector x(space.dim(), 0);
  for (unsigned i = 1; i <= r; ++i) x = vec_add(x, vec_add(space.x(i), space.xbar(i), p), p);
  labels.push_back("x");
  s.vertex_vector.push_back(x);
  labels.push_back("xbar");
  s.vertex_vector.push_back(vec_zero(space.dim()));
  for (unsigned i = 1; i <= r; ++i) {
    labels.push_back("x" + std::to_string(i));
    s.vertex_vector.push_back(space.x(i));
    labels.push_back("xbar" + std::to_string(i));
    s.vertex_vector.push_back(space.xbar(i));
  }
  // vertex 2k, 2k+1 form factor k; factor index increases along the join
  s.poset = make_poset(std::move(labels), [](size_t i, size_t j) { return i / 2 < j / 2; });
  return s;
}

// tau-tilde : sd J -> C_{H(V)} I(V). Conceptually this is thetabar of the
// translated canonical chamber of the Tits building of V' = <x_0,xbar_0> + V,
// pushed along the symplectic map fixing xbar_0 and sending x_0 to the sum
// of all hyperbolic pairs, x_i to x_i + xbar_0, xbar_i to xbar_i - xbar_0.
// Written out in V, the chain j_1 < ... < j_s lands on the coset
//   (eps_1 j_1, [j_1 = x]) . < eps_k j_k - eps_1 j_1 : k = 2..s >
// with eps = -1 on the vertices xbar_i and +1 elsewhere. For p = 2 all
// signs vanish and this is the coset (j_1) <j_2 - j_1, ..., j_s - j_1>.
// The subdivision poset must be the one produced by barycentric().
inline PosetMap map_tau_tilde(const SymplecticSpace& space, const SphereJ& sphere,
                              const Poset& sd, const HeisCosetPoset& dst) {
  const unsigned p = space.p();
  // rebuild the chain list in the order barycentric() used
  SimplicialComplex c = order_complex(sphere.poset);
  std::vector<std::vector<int>> chains;
  for (const auto& level : c.by_dim) chains.insert(chains.end(), level.begin(), level.end());
  std::stable_sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (chains.size() != sd.size()) throw std::invalid_argument("map_tau_tilde: sd poset mismatch");
  auto eps = [](int vertex) -> unsigned { return (vertex >= 3 && vertex % 2 == 1) ? 1 : 0; };
  auto signed_vec = [&](int vertex) {
    const FpVector& v = sphere.vertex_vector[vertex];
    return eps(vertex) ? vec_scale(v, p - 1, p) : v;
  };
  std::vector<size_t> image;
  for (const auto& chain : chains) {
    FpVector base = signed_vec(chain[0]);
    std::vector<FpVector> rows;
    for (size_t k = 1; k < chain.size(); ++k)
      rows.push_back(vec_sub(signed_vec(chain[k]), base, p));
    Subspace dir = canonicalize(p, space.dim(), std::move(rows));
    if (!is_isotropic(space, dir))
      throw std::logic_error("map_tau_tilde: spanned subspace not isotropic");
    const unsigned t = (chain[0] == 0) ? 1 : 0;
    image.push_back(dst.find(dir, base, t));
  }
  return make_poset_map(sd, dst.poset, std::move(image));
}

}  // namespace cposet
