// Finite posets and their simplicial machinery: order complexes, joins,
// suspensions, barycentric subdivision, fibers of poset maps.
//
// Element order is always a linear extension of the poset order, so chain
// enumeration emits strict chains with increasing indices and boundary
// matrices are reproducible across runs.

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cposet {

struct Poset {
  std::vector<std::string> labels;
  // above[i] bit j set iff i < j strictly
  std::vector<boost::dynamic_bitset<>> above;

  size_t size() const { return labels.size(); }
  bool less(size_t i, size_t j) const { return above[i][j]; }
  bool leq(size_t i, size_t j) const { return i == j || above[i][j]; }
};

// Builds a poset from a strict-order predicate. The element order must be a
// linear extension; verified during construction. Transitivity spot-checks.
template <typename Less>
inline Poset make_poset(std::vector<std::string> labels, Less less) {
  Poset p;
  const size_t n = labels.size();
  p.labels = std::move(labels);
  p.above.assign(n, boost::dynamic_bitset<>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (less(i, j)) {
        if (j < i) throw std::logic_error("make_poset: element order is not a linear extension");
        p.above[i][j] = true;
      }
    }
  for (size_t i = 0; i < n; ++i) {
    if (p.above[i][i]) throw std::logic_error("make_poset: irreflexivity violated");
    for (size_t j = i + 1; j < n; ++j)
      if (p.above[i][j]) {
        if (p.above[j][i]) throw std::logic_error("make_poset: antisymmetry violated");
        if ((p.above[j] & ~p.above[i]).any())
          throw std::logic_error("make_poset: transitivity violated");
      }
  }
  return p;
}

// Induced subposet on the given (sorted) element indices.
inline Poset induced_subposet(const Poset& p, const std::vector<size_t>& elems) {
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (size_t e : elems) labels.push_back(p.labels[e]);
  return make_poset(std::move(labels),
                    [&](size_t i, size_t j) { return p.less(elems[i], elems[j]); });
}

inline bool has_terminal(const Poset& p) {
  if (p.size() == 0) return false;
  for (size_t t = 0; t < p.size(); ++t) {
    bool terminal = true;
    for (size_t i = 0; i < p.size() && terminal; ++i)
      if (i != t && !p.less(i, t)) terminal = false;
    if (terminal) return true;
  }
  return false;
}

inline bool has_initial(const Poset& p) {
  if (p.size() == 0) return false;
  for (size_t t = 0; t < p.size(); ++t) {
    bool initial = true;
    for (size_t i = 0; i < p.size() && initial; ++i)
      if (i != t && !p.less(t, i)) initial = false;
    if (initial) return true;
  }
  return false;
}

// An order-preserving map between posets; preservation is verified on all
// comparable pairs at construction (hard invariant).
struct PosetMap {
  const Poset* source = nullptr;
  const Poset* target = nullptr;
  std::vector<size_t> image;
};

inline PosetMap make_poset_map(const Poset& src, const Poset& dst, std::vector<size_t> image) {
  if (image.size() != src.size()) throw std::invalid_argument("make_poset_map: image size mismatch");
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = 0; j < src.size(); ++j)
      if (src.less(i, j) && !dst.leq(image[i], image[j]))
        throw std::logic_error("make_poset_map: not order-preserving");
  return PosetMap{&src, &dst, std::move(image)};
}

enum class FiberSide { under, over };

// f/<=y (elements with f(x) <= y) or f/>=y, as an induced subposet.
inline Poset fiber(const PosetMap& f, size_t y, FiberSide side) {
  if (y >= f.target->size()) throw std::invalid_argument("fiber: target element out of range");
  std::vector<size_t> elems;
  for (size_t x = 0; x < f.source->size(); ++x) {
    const bool in = side == FiberSide::under ? f.target->leq(f.image[x], y)
                                             : f.target->leq(y, f.image[x]);
    if (in) elems.push_back(x);
  }
  return induced_subposet(*f.source, elems);
}

// Join: everything in p below everything in q.
inline Poset join(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels;
  labels.insert(labels.end(), q.labels.begin(), q.labels.end());
  const size_t np = p.size();
  return make_poset(std::move(labels), [&](size_t i, size_t j) {
    if (i < np && j < np) return p.less(i, j);
    if (i >= np && j >= np) return q.less(i - np, j - np);
    return i < np && j >= np;
  });
}

inline Poset antichain(std::vector<std::string> labels) {
  return make_poset(std::move(labels), [](size_t, size_t) { return false; });
}

inline Poset suspension(const Poset& p) { return join(antichain({"S0a", "S0b"}), p); }

// --- order complex ---

struct SimplicialComplex {
  // simplices_by_dim[k]: sorted list of strictly increasing (k+1)-tuples
  std::vector<std::vector<std::vector<int>>> by_dim;

  int dimension() const { return static_cast<int>(by_dim.size()) - 1; }
  size_t count(int k) const {
    return (k < 0 || k > dimension()) ? 0 : by_dim[k].size();
  }
  long long euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim[k].size());
    return chi;
  }
  // index of a sorted simplex within its dimension; -1 when absent
  long long index_of(const std::vector<int>& s) const {
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dimension()) return -1;
    const auto& v = by_dim[k];
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) return -1;
    return it - v.begin();
  }
};

// k-simplices are the strict chains x0 < ... < xk. DFS over successor
// lists; the linear-extension element order makes the output lexicographic.
inline SimplicialComplex order_complex(const Poset& p, size_t simplex_guard = 50'000'000) {
  const size_t n = p.size();
  std::vector<std::vector<int>> succ(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = p.above[i].find_first(); j != boost::dynamic_bitset<>::npos;
         j = p.above[i].find_next(j))
      succ[i].push_back(static_cast<int>(j));

  SimplicialComplex c;
  size_t total = 0;
  std::vector<int> chain;
  auto emit = [&](auto&& self, int last) -> void {
    if (++total > simplex_guard) throw std::runtime_error("order_complex: simplex guard exceeded");
    const int k = static_cast<int>(chain.size()) - 1;
    if (static_cast<int>(c.by_dim.size()) <= k) c.by_dim.resize(k + 1);
    c.by_dim[k].push_back(chain);
    for (int nxt : succ[last]) {
      chain.push_back(nxt);
      self(self, nxt);
      chain.pop_back();
    }
  };
  for (size_t i = 0; i < n; ++i) {
    chain = {static_cast<int>(i)};
    emit(emit, static_cast<int>(i));
  }
  for (auto& level : c.by_dim)
    if (!std::is_sorted(level.begin(), level.end()))
      std::sort(level.begin(), level.end());
  return c;
}

// Poset of simplices of the order complex under the face relation (the
// Barratt nerve of the nerve); its nerve is the barycentric subdivision.
inline Poset barycentric(const Poset& p) {
  SimplicialComplex c = order_complex(p);
  std::vector<std::vector<int>> simplices;
  for (const auto& level : c.by_dim)
    simplices.insert(simplices.end(), level.begin(), level.end());
  // sort by (length, vertices): a linear extension of the face relation
  std::stable_sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::string> labels;
  for (const auto& s : simplices) {
    std::string l = "{";
    for (size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + p.labels[s[i]];
    labels.push_back(l + "}");
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  return make_poset(std::move(labels), [&](size_t i, size_t j) {
    return simplices[i].size() < simplices[j].size() && subset(simplices[i], simplices[j]);
  });
}

// --- complex text export: one simplex per line, dim-prefixed ---

inline std::string complex_to_string(const SimplicialComplex& c) {
  std::string out;
  for (int k = 0; k <= c.dimension(); ++k)
    for (const auto& s : c.by_dim[k]) {
      out += std::to_string(k);
      for (int v : s) {
        out.push_back(' ');
        out += std::to_string(v);
      }
      out.push_back('\n');
    }
  return out;
}

}  // namespace cposet
