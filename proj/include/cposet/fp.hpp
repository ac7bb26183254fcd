// Exact linear algebra over prime fields F_p.
//
// Subspaces are kept in reduced row-echelon form at all times, so two
// subspaces are equal iff their representations are bitwise equal. All
// operations are pure; every type is immutable after construction.

#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cposet {

using FpVector = std::vector<unsigned>;

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldSpec {
  unsigned p;
  explicit FieldSpec(unsigned p_) : p(p_) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: modulus must be prime");
    if (p > 97) throw std::invalid_argument("FieldSpec: modulus above desk-scale guard (97)");
  }
};

inline unsigned fp_neg(unsigned a, unsigned p) { return a == 0 ? 0 : p - a; }

inline unsigned fp_inv(unsigned a, unsigned p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  // extended Euclid
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return static_cast<unsigned>(t < 0 ? t + p : t);
}

inline FpVector vec_add(const FpVector& a, const FpVector& b, unsigned p) {
  FpVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

inline FpVector vec_sub(const FpVector& a, const FpVector& b, unsigned p) {
  FpVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p - b[i]) % p;
  return r;
}

inline FpVector vec_scale(const FpVector& a, unsigned c, unsigned p) {
  FpVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
  return r;
}

inline bool vec_is_zero(const FpVector& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned x) { return x == 0; });
}

inline FpVector vec_zero(unsigned n) { return FpVector(n, 0); }

// In-place reduction of a list of row vectors to RREF. Returns pivot columns.
inline std::vector<unsigned> rref(std::vector<FpVector>& rows, unsigned p) {
  std::vector<unsigned> pivots;
  if (rows.empty()) return pivots;
  const size_t ncols = rows[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
    size_t sel = row;
    while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[row], rows[sel]);
    unsigned inv = fp_inv(rows[row][col], p);
    for (size_t j = col; j < ncols; ++j) rows[row][j] = (rows[row][j] * inv) % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == row) continue;
      unsigned c = rows[i][col] % p;
      if (c == 0) continue;
      for (size_t j = col; j < ncols; ++j)
        rows[i][j] = (rows[i][j] + (p - c) * rows[row][j]) % p;
    }
    pivots.push_back(static_cast<unsigned>(col));
    ++row;
  }
  rows.resize(row);
  return pivots;
}

// A subspace of F_p^n, stored as the unique RREF basis.
struct Subspace {
  unsigned p = 2;
  unsigned ambient = 0;
  std::vector<FpVector> basis;    // RREF rows, pivots strictly increasing
  std::vector<unsigned> pivots;   // pivot column of each basis row

  unsigned dim() const { return static_cast<unsigned>(basis.size()); }
  bool operator==(const Subspace&) const = default;
};

// Total order: by dimension, then lexicographically on the basis matrix.
// Used everywhere a deterministic enumeration order is required.
inline bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis < b.basis;
}

inline Subspace canonicalize(unsigned p, unsigned ambient, std::vector<FpVector> rows) {
  for (const auto& r : rows)
    if (r.size() != ambient) throw std::invalid_argument("canonicalize: ambient dimension mismatch");
  for (auto& r : rows)
    for (auto& x : r) x %= p;
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  s.pivots = rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

inline Subspace zero_subspace(unsigned p, unsigned ambient) {
  return canonicalize(p, ambient, {});
}

inline Subspace full_space(unsigned p, unsigned ambient) {
  std::vector<FpVector> rows;
  for (unsigned i = 0; i < ambient; ++i) {
    FpVector e(ambient, 0);
    e[i] = 1;
    rows.push_back(e);
  }
  return canonicalize(p, ambient, std::move(rows));
}

inline void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || a.p != b.p)
    throw std::invalid_argument("subspace operation: ambient space mismatch");
}

inline Subspace span_sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  std::vector<FpVector> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return canonicalize(a.p, a.ambient, std::move(rows));
}

// Unique canonical representative of the coset v + a: eliminate the pivot
// coordinates of a from v.
inline FpVector reduce_mod(const FpVector& v, const Subspace& a) {
  if (v.size() != a.ambient) throw std::invalid_argument("reduce_mod: dimension mismatch");
  FpVector r = v;
  for (auto& x : r) x %= a.p;
  for (size_t i = 0; i < a.basis.size(); ++i) {
    unsigned c = r[a.pivots[i]];
    if (c == 0) continue;
    for (size_t j = 0; j < r.size(); ++j)
      r[j] = (r[j] + (a.p - c) * a.basis[i][j]) % a.p;
  }
  return r;
}

inline bool member(const FpVector& v, const Subspace& a) {
  return vec_is_zero(reduce_mod(v, a));
}

// b subset of a
inline bool contains(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  for (const auto& row : b.basis)
    if (!member(row, a)) return false;
  return true;
}

// Kernel of the linear map given by matrix rows (map x -> (row_i . x)_i).
inline Subspace kernel(const std::vector<FpVector>& rows, unsigned p, unsigned ncols) {
  std::vector<FpVector> m = rows;
  std::vector<unsigned> pivots = rref(m, p);
  std::vector<bool> is_pivot(ncols, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (unsigned free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(ncols, 0);
    v[free] = 1;
    for (size_t i = 0; i < m.size(); ++i)
      v[pivots[i]] = fp_neg(m[i][free] % p, p);
    basis.push_back(std::move(v));
  }
  return canonicalize(p, ncols, std::move(basis));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return zero_subspace(a.p, a.ambient);
  // Solve sum alpha_i a_i = sum beta_j b_j: kernel of [A^T | -B^T].
  const unsigned da = a.dim(), db = b.dim();
  std::vector<FpVector> m(a.ambient, FpVector(da + db, 0));
  for (unsigned i = 0; i < da; ++i)
    for (unsigned r = 0; r < a.ambient; ++r) m[r][i] = a.basis[i][r];
  for (unsigned j = 0; j < db; ++j)
    for (unsigned r = 0; r < a.ambient; ++r) m[r][da + j] = fp_neg(b.basis[j][r], a.p);
  Subspace sols = kernel(m, a.p, da + db);
  std::vector<FpVector> gens;
  for (const auto& s : sols.basis) {
    FpVector v(a.ambient, 0);
    for (unsigned i = 0; i < da; ++i)
      if (s[i] != 0) v = vec_add(v, vec_scale(a.basis[i], s[i], a.p), a.p);
    gens.push_back(std::move(v));
  }
  return canonicalize(a.p, a.ambient, std::move(gens));
}

// All p^dim vectors of a subspace, in deterministic order.
inline std::vector<FpVector> enumerate_vectors(const Subspace& a) {
  std::vector<FpVector> out;
  const unsigned d = a.dim();
  size_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= a.p;
  out.reserve(total);
  std::vector<unsigned> coeff(d, 0);
  for (size_t it = 0; it < total; ++it) {
    FpVector v(a.ambient, 0);
    for (unsigned i = 0; i < d; ++i)
      if (coeff[i] != 0) v = vec_add(v, vec_scale(a.basis[i], coeff[i], a.p), a.p);
    out.push_back(std::move(v));
    for (unsigned i = 0; i < d; ++i) {
      if (++coeff[i] < a.p) break;
      coeff[i] = 0;
    }
  }
  return out;
}

// All vectors of the ambient space F_p^n.
inline std::vector<FpVector> enumerate_ambient(unsigned p, unsigned n) {
  return enumerate_vectors(full_space(p, n));
}

// Coordinate map V -> V/a: read off the non-pivot coordinates of the
// canonical coset representative. Kernel is exactly a.
struct QuotientMap {
  Subspace sub;
  std::vector<unsigned> coords;   // non-pivot columns of sub

  unsigned target_dim() const { return static_cast<unsigned>(coords.size()); }

  FpVector apply(const FpVector& v) const {
    FpVector r = reduce_mod(v, sub);
    FpVector out(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) out[i] = r[coords[i]];
    return out;
  }

  Subspace apply_subspace(const Subspace& b) const {
    std::vector<FpVector> rows;
    for (const auto& r : b.basis) rows.push_back(apply(r));
    return canonicalize(sub.p, target_dim(), std::move(rows));
  }

  // A section of the quotient map: place coordinates back at the
  // non-pivot columns. apply(lift(w)) == w.
  FpVector lift(const FpVector& w) const {
    FpVector v(sub.ambient, 0);
    for (size_t i = 0; i < coords.size(); ++i) v[coords[i]] = w[i];
    return v;
  }
};

inline QuotientMap quotient_coords(const Subspace& a) {
  QuotientMap q;
  q.sub = a;
  std::vector<bool> is_pivot(a.ambient, false);
  for (unsigned c : a.pivots) is_pivot[c] = true;
  for (unsigned c = 0; c < a.ambient; ++c)
    if (!is_pivot[c]) q.coords.push_back(c);
  return q;
}

// --- text format: one basis row per line, digits 0..p-1, blank line ends ---

inline std::string vector_to_string(const FpVector& v) {
  std::string s;
  s.reserve(v.size());
  for (unsigned x : v) s.push_back(static_cast<char>('0' + x));
  return s;
}

inline std::string subspace_to_string(const Subspace& a) {
  std::string s;
  for (const auto& row : a.basis) {
    s += vector_to_string(row);
    s.push_back('\n');
  }
  s.push_back('\n');
  return s;
}

inline FpVector vector_from_string(const std::string& line, unsigned p) {
  FpVector v;
  v.reserve(line.size());
  for (char c : line) {
    if (c < '0' || c >= static_cast<char>('0' + p))
      throw std::invalid_argument("vector_from_string: digit out of range");
    v.push_back(static_cast<unsigned>(c - '0'));
  }
  return v;
}

// Reads rows until a blank line (or end of stream), canonicalizes the span.
inline Subspace subspace_from_stream(std::istream& in, unsigned p, unsigned ambient) {
  std::vector<FpVector> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    rows.push_back(vector_from_string(line, p));
  }
  return canonicalize(p, ambient, std::move(rows));
}

}  // namespace cposet
