// Concrete finite group models backed by dense multiplication tables:
// Heisenberg groups H(V), extraspecial p-groups from explicit bilinear
// cocycles, the group pi inside E x E, the homomorphism phi, abelian
// subgroup enumeration and canonical cosets.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cposet/symplectic.hpp"

namespace cposet {

constexpr size_t kGroupOrderGuard = 729;  // 3^6

struct GroupModel {
  size_t order = 0;
  std::vector<std::vector<uint16_t>> mul;
  std::vector<uint16_t> inv;
  uint16_t identity = 0;
  std::vector<std::string> labels;
  std::vector<uint16_t> center;  // sorted element indices

  // Surjection onto the Frattini-quotient vector space, when the model has
  // one (Heisenberg / extraspecial pairs (v,t) -> v).
  bool has_to_V = false;
  unsigned p = 0;
  unsigned vdim = 0;
  std::vector<FpVector> to_V;

  uint16_t power(uint16_t g, long long e) const {
    uint16_t acc = identity;
    if (e < 0) {
      g = inv[g];
      e = -e;
    }
    for (long long i = 0; i < e; ++i) acc = mul[acc][g];
    return acc;
  }

  unsigned element_order(uint16_t g) const {
    unsigned n = 1;
    uint16_t acc = g;
    while (acc != identity) {
      acc = mul[acc][g];
      ++n;
    }
    return n;
  }

  uint16_t commutator(uint16_t a, uint16_t b) const {
    return mul[mul[mul[a][b]][inv[a]]][inv[b]];
  }

  bool commutes(uint16_t a, uint16_t b) const { return mul[a][b] == mul[b][a]; }
};

namespace detail {

// Verifies group axioms; exhaustive associativity up to 3^5 elements,
// sampled triples above.
inline void verify_group(const GroupModel& g) {
  const size_t n = g.order;
  for (size_t a = 0; a < n; ++a) {
    if (g.mul[g.identity][a] != a || g.mul[a][g.identity] != a)
      throw std::logic_error("group model: identity law fails");
    if (g.mul[a][g.inv[a]] != g.identity || g.mul[g.inv[a]][a] != g.identity)
      throw std::logic_error("group model: inverse law fails");
  }
  const bool exhaustive = n <= 243;
  const size_t stride = exhaustive ? 1 : 7;
  for (size_t a = 0; a < n; a += (exhaustive ? 1 : 3))
    for (size_t b = 0; b < n; b += (exhaustive ? 1 : 5))
      for (size_t c = 0; c < n; c += stride)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw std::logic_error("group model: associativity fails");
}

inline void compute_center(GroupModel& g) {
  g.center.clear();
  for (size_t a = 0; a < g.order; ++a) {
    bool central = true;
    for (size_t b = 0; b < g.order && central; ++b)
      if (g.mul[a][b] != g.mul[b][a]) central = false;
    if (central) g.center.push_back(static_cast<uint16_t>(a));
  }
}

inline size_t vector_rank(const FpVector& v, unsigned p) {
  size_t idx = 0;
  for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
  return idx;
}

}  // namespace detail

// A group of pairs (v,t) with multiplication (v1+v2, c(v1,v2)+t1+t2) for a
// bilinear cocycle c. Covers Heisenberg (c = b) and extraspecial groups.
template <typename Cocycle>
inline GroupModel pair_group(unsigned p, unsigned vdim, Cocycle c) {
  GroupModel g;
  g.p = p;
  g.vdim = vdim;
  g.has_to_V = true;
  auto vectors = enumerate_ambient(p, vdim);
  g.order = vectors.size() * p;
  if (g.order > kGroupOrderGuard) throw std::invalid_argument("pair_group: order exceeds desk-scale guard");
  g.mul.assign(g.order, std::vector<uint16_t>(g.order));
  g.inv.assign(g.order, 0);
  auto index = [&](const FpVector& v, unsigned t) {
    return static_cast<uint16_t>(detail::vector_rank(v, p) * p + t % p);
  };
  for (const auto& v : vectors)
    for (unsigned t = 0; t < p; ++t) {
      g.to_V.push_back(v);
      g.labels.push_back("(" + vector_to_string(v) + "," + std::to_string(t) + ")");
    }
  g.identity = index(vec_zero(vdim), 0);
  for (size_t i = 0; i < g.order; ++i) {
    const FpVector& v1 = g.to_V[i];
    const unsigned t1 = static_cast<unsigned>(i % p);
    for (size_t j = 0; j < g.order; ++j) {
      const FpVector& v2 = g.to_V[j];
      const unsigned t2 = static_cast<unsigned>(j % p);
      g.mul[i][j] = index(vec_add(v1, v2, p), (c(v1, v2) + t1 + t2) % p);
    }
    // (v,t)^-1 = (-v, c(v,v) - t)
    FpVector nv = vec_scale(v1, p - 1, p);
    g.inv[i] = index(nv, (c(v1, v1) + 2 * p - t1) % p);
  }
  detail::verify_group(g);
  detail::compute_center(g);
  return g;
}

inline GroupModel heisenberg(const SymplecticSpace& space) {
  return pair_group(space.p(), space.dim(),
                    [&space](const FpVector& v, const FpVector& w) { return space.form.eval(v, w); });
}

enum class ExtraspecialVariant { exponent_p, plus, minus };

inline GroupModel extraspecial(unsigned p, unsigned r, ExtraspecialVariant variant) {
  if (variant == ExtraspecialVariant::exponent_p && p == 2)
    throw std::invalid_argument("extraspecial: exponent_p requires odd p");
  if (variant != ExtraspecialVariant::exponent_p && p != 2)
    throw std::invalid_argument("extraspecial: plus/minus require p = 2");
  const unsigned n = 2 * r;
  // Upper-triangular cocycle c(v,w) = sum_i v[x_i] w[xbar_i]; its
  // antisymmetrization is the standard symplectic form. The minus variant
  // adds diagonal terms on the last hyperbolic pair, flipping the Arf
  // invariant of the squaring form q(v) = c(v,v).
  const bool minus = (variant == ExtraspecialVariant::minus);
  auto c = [p, r, minus](const FpVector& v, const FpVector& w) -> unsigned {
    unsigned long long acc = 0;
    for (unsigned i = 0; i < r; ++i) acc += static_cast<unsigned long long>(v[i]) * w[r + i];
    if (minus) acc += static_cast<unsigned long long>(v[r - 1]) * w[r - 1] +
                      static_cast<unsigned long long>(v[2 * r - 1]) * w[2 * r - 1];
    return static_cast<unsigned>(acc % p);
  };
  return pair_group(p, n, c);
}

// Commutator form on V induced by a central extension E -> V: evaluated on
// arbitrary lifts and checked to be independent of the choice.
inline AlternatingForm commutator_form(const GroupModel& e) {
  if (!e.has_to_V) throw std::invalid_argument("commutator_form: model has no quotient map");
  const unsigned p = e.p, n = e.vdim;
  if (e.center.size() != p && !(p == 2 && e.center.size() == e.order))
    throw std::logic_error("commutator_form: central kernel is not of order p");
  // identify the center with Z/p: residue = t-coordinate of (0,t)
  auto central_residue = [&](uint16_t z) -> unsigned {
    if (!vec_is_zero(e.to_V[z])) throw std::logic_error("commutator_form: commutator not central");
    return static_cast<unsigned>(z % p);
  };
  // group elements by image vector
  std::map<size_t, std::vector<uint16_t>> fibers;
  for (size_t i = 0; i < e.order; ++i) fibers[detail::vector_rank(e.to_V[i], p)].push_back(static_cast<uint16_t>(i));
  auto vectors = enumerate_ambient(p, n);
  std::vector<FpVector> gram(n, FpVector(n, 0));
  for (unsigned i = 0; i < n; ++i) {
    FpVector ei(n, 0);
    ei[i] = 1;
    for (unsigned j = 0; j < n; ++j) {
      FpVector ej(n, 0);
      ej[j] = 1;
      const auto& lifts_i = fibers.at(detail::vector_rank(ei, p));
      const auto& lifts_j = fibers.at(detail::vector_rank(ej, p));
      unsigned value = central_residue(e.commutator(lifts_i[0], lifts_j[0]));
      for (uint16_t a : lifts_i)
        for (uint16_t b : lifts_j)
          if (central_residue(e.commutator(a, b)) != value)
            throw std::logic_error("commutator_form: value depends on the lifts");
      gram[i][j] = value;
    }
  }
  return make_form(p, std::move(gram));
}

// --- subgroups ---

struct SubgroupSet {
  std::vector<uint16_t> members;  // sorted

  size_t size() const { return members.size(); }
  bool contains(uint16_t g) const { return std::binary_search(members.begin(), members.end(), g); }
  bool operator==(const SubgroupSet&) const = default;
  bool operator<(const SubgroupSet& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }
};

inline SubgroupSet trivial_subgroup(const GroupModel& g) { return SubgroupSet{{g.identity}}; }

inline SubgroupSet full_subgroup(const GroupModel& g) {
  SubgroupSet s;
  s.members.resize(g.order);
  for (size_t i = 0; i < g.order; ++i) s.members[i] = static_cast<uint16_t>(i);
  return s;
}

inline SubgroupSet closure(const GroupModel& g, std::vector<uint16_t> gens) {
  std::set<uint16_t> seen = {g.identity};
  std::vector<uint16_t> frontier = {g.identity};
  for (uint16_t x : gens)
    if (seen.insert(x).second) frontier.push_back(x);
  for (size_t i = 0; i < frontier.size(); ++i)
    for (uint16_t x : gens) {
      uint16_t y = g.mul[frontier[i]][x];
      if (seen.insert(y).second) frontier.push_back(y);
      y = g.mul[x][frontier[i]];
      if (seen.insert(y).second) frontier.push_back(y);
    }
  SubgroupSet s;
  s.members.assign(seen.begin(), seen.end());
  return s;
}

inline bool is_abelian_set(const GroupModel& g, const SubgroupSet& s) {
  for (size_t i = 0; i < s.members.size(); ++i)
    for (size_t j = i + 1; j < s.members.size(); ++j)
      if (!g.commutes(s.members[i], s.members[j])) return false;
  return true;
}

// All abelian subgroups including the trivial one, sorted by (size, members).
inline std::vector<SubgroupSet> abelian_subgroups(const GroupModel& g) {
  if (g.order > kGroupOrderGuard) throw std::invalid_argument("abelian_subgroups: size guard exceeded");
  std::set<SubgroupSet> found;
  std::vector<SubgroupSet> frontier = {trivial_subgroup(g)};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<SubgroupSet> next;
    for (const auto& a : frontier) {
      for (size_t x = 0; x < g.order; ++x) {
        uint16_t gx = static_cast<uint16_t>(x);
        if (a.contains(gx)) continue;
        bool centralizes = true;
        for (uint16_t m : a.members)
          if (!g.commutes(gx, m)) {
            centralizes = false;
            break;
          }
        if (!centralizes) continue;
        std::vector<uint16_t> gens = a.members;
        gens.push_back(gx);
        SubgroupSet ext = closure(g, gens);
        if (!is_abelian_set(g, ext)) continue;
        if (found.insert(ext).second) next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

// --- pi and phi ---

// pi = kernel of the multiplication map E x E -> E/[E,E]; for an
// extraspecial E this is { (e,e') : ee' in Z(E) }.
struct PiGroup {
  GroupModel model;
  std::vector<std::pair<uint16_t, uint16_t>> pairs;  // element i of pi = (e, e') in E x E
  std::map<std::pair<uint16_t, uint16_t>, uint16_t> index;

  // iota(A) = { (a, a^-1) } for a subgroup A of E
  SubgroupSet embed(const GroupModel& e, const SubgroupSet& a) const {
    SubgroupSet s;
    for (uint16_t m : a.members) s.members.push_back(index.at({m, e.inv[m]}));
    std::sort(s.members.begin(), s.members.end());
    return s;
  }
};

inline PiGroup make_pi(const GroupModel& e) {
  if (!e.has_to_V) throw std::invalid_argument("make_pi: model has no quotient map");
  std::set<uint16_t> derived;  // [E,E]
  for (size_t a = 0; a < e.order; ++a)
    for (size_t b = 0; b < e.order; ++b)
      derived.insert(e.commutator(static_cast<uint16_t>(a), static_cast<uint16_t>(b)));
  PiGroup pi;
  for (size_t a = 0; a < e.order; ++a)
    for (size_t b = 0; b < e.order; ++b)
      if (derived.count(e.mul[a][b])) {
        pi.index[{static_cast<uint16_t>(a), static_cast<uint16_t>(b)}] =
            static_cast<uint16_t>(pi.pairs.size());
        pi.pairs.emplace_back(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
      }
  GroupModel& g = pi.model;
  g.order = pi.pairs.size();
  if (g.order > kGroupOrderGuard) throw std::invalid_argument("make_pi: order exceeds desk-scale guard");
  g.mul.assign(g.order, std::vector<uint16_t>(g.order));
  g.inv.assign(g.order, 0);
  for (size_t i = 0; i < g.order; ++i) {
    auto [a1, b1] = pi.pairs[i];
    g.labels.push_back("(" + e.labels[a1] + ";" + e.labels[b1] + ")");
    g.inv[i] = pi.index.at({e.inv[a1], e.inv[b1]});
    for (size_t j = 0; j < g.order; ++j) {
      auto [a2, b2] = pi.pairs[j];
      g.mul[i][j] = pi.index.at({e.mul[a1][a2], e.mul[b1][b2]});
    }
  }
  g.identity = pi.index.at({e.identity, e.identity});
  detail::verify_group(g);
  detail::compute_center(g);
  return pi;
}

// phi : pi -> H(V), (e,e') -> (nu(e), ee'). Exhaustively verified to be a
// surjective homomorphism with kernel { (a, a^-1) : a in Z(E) }.
struct PhiMap {
  std::vector<uint16_t> image;   // per element of pi, an element of H
  std::vector<uint16_t> kernel;  // sorted element indices of pi
};

inline PhiMap phi_map(const PiGroup& pi, const GroupModel& e, const GroupModel& h) {
  const unsigned p = e.p;
  PhiMap phi;
  for (size_t i = 0; i < pi.model.order; ++i) {
    auto [a, b] = pi.pairs[i];
    uint16_t prod = e.mul[a][b];
    if (!vec_is_zero(e.to_V[prod])) throw std::logic_error("phi_map: ee' is not central");
    unsigned t = static_cast<unsigned>(prod % p);
    uint16_t img = static_cast<uint16_t>(detail::vector_rank(e.to_V[a], p) * p + t);
    phi.image.push_back(img);
    if (img == h.identity) phi.kernel.push_back(static_cast<uint16_t>(i));
  }
  for (size_t i = 0; i < pi.model.order; ++i)
    for (size_t j = 0; j < pi.model.order; ++j)
      if (phi.image[pi.model.mul[i][j]] != h.mul[phi.image[i]][phi.image[j]])
        throw std::logic_error("phi_map: not a homomorphism (form-convention mismatch?)");
  std::set<uint16_t> image_set(phi.image.begin(), phi.image.end());
  if (image_set.size() != h.order) throw std::logic_error("phi_map: not surjective");
  return phi;
}

// --- cosets ---

struct GroupCoset {
  uint32_t subgroup = 0;  // index into an external collection
  uint16_t rep = 0;       // minimal element index over { g a : a in subgroup }
  bool operator==(const GroupCoset&) const = default;
  bool operator<(const GroupCoset& o) const {
    return subgroup != o.subgroup ? subgroup < o.subgroup : rep < o.rep;
  }
};

inline uint16_t coset_rep(const GroupModel& g, uint16_t x, const SubgroupSet& a) {
  uint16_t best = g.mul[x][a.members[0]];
  for (uint16_t m : a.members) best = std::min(best, g.mul[x][m]);
  return best;
}

inline std::vector<uint16_t> coset_elements(const GroupModel& g, uint16_t rep, const SubgroupSet& a) {
  std::vector<uint16_t> out;
  out.reserve(a.members.size());
  for (uint16_t m : a.members) out.push_back(g.mul[rep][m]);
  std::sort(out.begin(), out.end());
  return out;
}

// c1 subset of c2 as sets: A1 subset of A2 and rep1 in rep2 A2.
inline bool coset_included(const GroupModel& g, uint16_t rep1, const SubgroupSet& a1,
                           uint16_t rep2, const SubgroupSet& a2) {
  if (a1.size() > a2.size()) return false;
  for (uint16_t m : a1.members)
    if (!a2.contains(m)) return false;
  return a2.contains(g.mul[g.inv[rep2]][rep1]);
}

// Product set A.H; |A.H| == |G| decides the span condition of F^{vee H}.
inline size_t product_set_size(const GroupModel& g, const SubgroupSet& a, const SubgroupSet& h) {
  std::set<uint16_t> prod;
  for (uint16_t x : a.members)
    for (uint16_t y : h.members) prod.insert(g.mul[x][y]);
  return prod.size();
}

inline bool is_normal(const GroupModel& g, const SubgroupSet& h) {
  for (size_t x = 0; x < g.order; ++x)
    for (uint16_t m : h.members)
      if (!h.contains(g.mul[g.mul[static_cast<uint16_t>(x)][m]][g.inv[x]])) return false;
  return true;
}

}  // namespace cposet
