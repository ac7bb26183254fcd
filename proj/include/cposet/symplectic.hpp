// Alternating bilinear forms, orthogonal complements and enumeration of
// isotropic subspaces. Degenerate forms (nonzero radical) are first-class:
// the almost extraspecial case lives in a 2r+1 dimensional space whose form
// has a one dimensional radical.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cposet/fp.hpp"

namespace cposet {

struct AlternatingForm {
  unsigned p = 2;
  unsigned n = 0;
  std::vector<FpVector> gram;  // n x n, alternating
  Subspace radical;            // kernel of the gram matrix

  unsigned eval(const FpVector& v, const FpVector& w) const {
    unsigned long long acc = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      unsigned long long row = 0;
      for (unsigned j = 0; j < n; ++j) row += static_cast<unsigned long long>(gram[i][j]) * w[j];
      acc += v[i] * (row % p);
    }
    return static_cast<unsigned>(acc % p);
  }
};

inline AlternatingForm make_form(unsigned p, std::vector<FpVector> gram) {
  AlternatingForm f;
  f.p = p;
  f.n = static_cast<unsigned>(gram.size());
  for (auto& row : gram) {
    if (row.size() != f.n) throw std::invalid_argument("make_form: gram not square");
    for (auto& x : row) x %= p;
  }
  for (unsigned i = 0; i < f.n; ++i) {
    if (gram[i][i] != 0) throw std::invalid_argument("make_form: nonzero diagonal");
    for (unsigned j = 0; j < f.n; ++j)
      if ((gram[i][j] + gram[j][i]) % p != 0)
        throw std::invalid_argument("make_form: gram not alternating");
  }
  f.gram = std::move(gram);
  f.radical = kernel(f.gram, p, f.n);
  return f;
}

// The symplectic space with basis x_1..x_r, xbar_1..xbar_r (plus radical
// labels), b(x_i, xbar_i) = 1, b(xbar_i, x_i) = -1.
struct SymplecticSpace {
  FieldSpec field;
  unsigned r = 0;
  unsigned radical_dim = 0;
  AlternatingForm form;
  std::vector<std::string> basis_labels;

  unsigned dim() const { return 2 * r + radical_dim; }
  unsigned p() const { return field.p; }

  FpVector basis_vector(unsigned i) const {
    FpVector v(dim(), 0);
    v[i] = 1;
    return v;
  }
  // x_i and xbar_i, 1-based to match the labels
  FpVector x(unsigned i) const { return basis_vector(i - 1); }
  FpVector xbar(unsigned i) const { return basis_vector(r + i - 1); }
};

inline SymplecticSpace standard_space(unsigned p, unsigned r, unsigned radical_dim = 0) {
  if (r < 1) throw std::invalid_argument("standard_space: r >= 1 required");
  SymplecticSpace s{FieldSpec(p)};
  s.r = r;
  s.radical_dim = radical_dim;
  const unsigned n = 2 * r + radical_dim;
  std::vector<FpVector> gram(n, FpVector(n, 0));
  for (unsigned i = 0; i < r; ++i) {
    gram[i][r + i] = 1;
    gram[r + i][i] = p - 1;
  }
  s.form = make_form(p, std::move(gram));
  for (unsigned i = 1; i <= r; ++i) s.basis_labels.push_back("x" + std::to_string(i));
  for (unsigned i = 1; i <= r; ++i) s.basis_labels.push_back("xbar" + std::to_string(i));
  for (unsigned i = 1; i <= radical_dim; ++i) s.basis_labels.push_back("rad" + std::to_string(i));
  return s;
}

inline Subspace perp(const SymplecticSpace& space, const Subspace& a) {
  if (a.ambient != space.dim()) throw std::invalid_argument("perp: ambient mismatch");
  // kernel of w -> (b(w, a_i))_i; rows of the system are a_i . gram^T,
  // i.e. b(w,a) = sum_j w_j * (gram . a)_j
  std::vector<FpVector> rows;
  const unsigned p = space.p(), n = space.dim();
  for (const auto& ai : a.basis) {
    FpVector row(n, 0);
    for (unsigned j = 0; j < n; ++j) {
      unsigned long long acc = 0;
      for (unsigned k = 0; k < n; ++k)
        acc += static_cast<unsigned long long>(space.form.gram[j][k]) * ai[k];
      row[j] = static_cast<unsigned>(acc % p);
    }
    rows.push_back(std::move(row));
  }
  return kernel(rows, p, n);
}

inline Subspace perp_of_vector(const SymplecticSpace& space, const FpVector& v) {
  return perp(space, canonicalize(space.p(), space.dim(), {v}));
}

inline bool is_isotropic(const SymplecticSpace& space, const Subspace& a) {
  for (size_t i = 0; i < a.basis.size(); ++i)
    for (size_t j = i; j < a.basis.size(); ++j)
      if (space.form.eval(a.basis[i], a.basis[j]) != 0) return false;
  return true;
}

// All isotropic subspaces of dimension j, canonically sorted. BFS over
// isotropic flags: extend I by vectors of I^perp \ I.
inline std::vector<Subspace> enumerate_isotropic(const SymplecticSpace& space, unsigned j) {
  std::vector<Subspace> level = {zero_subspace(space.p(), space.dim())};
  for (unsigned d = 1; d <= j; ++d) {
    std::map<std::vector<FpVector>, Subspace> next;
    for (const auto& iso : level) {
      Subspace ext = perp(space, iso);
      for (const auto& v : enumerate_vectors(ext)) {
        if (member(v, iso)) continue;
        std::vector<FpVector> rows = iso.basis;
        rows.push_back(v);
        Subspace cand = canonicalize(space.p(), space.dim(), std::move(rows));
        next.emplace(cand.basis, cand);
      }
    }
    level.clear();
    for (auto& [key, s] : next) level.push_back(std::move(s));
  }
  return level;
}

// All isotropic subspaces, all dimensions including 0, sorted by
// (dimension, basis).
inline std::vector<Subspace> enumerate_isotropic_all(const SymplecticSpace& space) {
  std::vector<Subspace> out;
  const unsigned maxdim = space.r + space.radical_dim;
  for (unsigned j = 0; j <= maxdim; ++j) {
    auto level = enumerate_isotropic(space, j);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::string gram_to_string(const AlternatingForm& f) {
  std::string s;
  for (const auto& row : f.gram) {
    s += vector_to_string(row);
    s.push_back('\n');
  }
  s.push_back('\n');
  return s;
}

}  // namespace cposet
