// Exact integral simplicial homology. Boundary matrices are sparse with
// entries +-1; the Smith normal form is computed by sparse elimination on
// unit pivots (Markowitz-ordered, lazily re-keyed heap) followed by a dense
// arbitrary-precision SNF of whatever small core survives. The sparse phase
// runs in int64 with overflow checks and falls back to cpp_int wholesale.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <iostream>
#include <map>
#include <cstdint>
#include <queue>
#include <set>

#include "cposet/poset.hpp"

namespace cposet {

using BigInt = boost::multiprecision::cpp_int;

// --- sparse boundary matrices (column-major, rows sorted) ---

struct BoundaryMatrix {
  size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<size_t, long long>>> col;

  size_t nnz() const {
    size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
  }
};

// --- Smith normal form ---

struct SmithResult {
  size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
};

namespace detail {

struct Int64Overflow {};

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Dense SNF over cpp_int; returns the nonzero diagonal in divisibility order.
inline std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  size_t top = 0;
  const size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  while (top < nr && top < nc) {
    // locate a minimal-magnitude nonzero entry in the remaining block
    size_t pr = nr, pc = nc;
    for (size_t i = top; i < nr; ++i)
      for (size_t j = top; j < nc; ++j)
        if (m[i][j] != 0 && (pr == nr || big_abs(m[i][j]) < big_abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == nr) break;
    std::swap(m[top], m[pr]);
    for (size_t i = 0; i < nr; ++i) std::swap(m[i][top], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = top + 1; i < nr; ++i) {
        if (m[i][top] == 0) continue;
        BigInt q = m[i][top] / m[top][top];
        for (size_t j = top; j < nc; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) {  // remainder smaller than pivot: promote it
          std::swap(m[top], m[i]);
          clean = false;
        }
      }
      for (size_t j = top + 1; j < nc; ++j) {
        if (m[top][j] == 0) continue;
        BigInt q = m[top][j] / m[top][top];
        for (size_t i = 0; i < nr; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) {
          for (size_t i = 0; i < nr; ++i) std::swap(m[i][top], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the block; if not, fold the offending
      // row into the pivot row and restart
      for (size_t i = top + 1; i < nr && clean; ++i)
        for (size_t j = top + 1; j < nc && clean; ++j)
          if (m[i][j] % m[top][top] != 0) {
            for (size_t k = top; k < nc; ++k) m[top][k] += m[i][k];
            clean = false;
          }
    }
    diag.push_back(big_abs(m[top][top]));
    ++top;
  }
  return diag;
}

template <typename Int>
SmithResult smith_impl(const BoundaryMatrix& bm, size_t dense_guard) {
  const size_t nr = bm.rows, nc = bm.cols;
  // Rows are sorted (col, value) vectors; column lists hold candidate rows
  // with lazy deletion (exact live counts kept separately; a stale entry is
  // skipped exactly once, when its column's pivot consumes the list). Keeps
  // memory near 20 bytes per nonzero so elimination fill-in stays affordable.
  std::vector<std::vector<std::pair<uint32_t, Int>>> row(nr);
  std::vector<std::vector<uint32_t>> col_list(nc);
  std::vector<uint32_t> col_count(nc, 0);
  size_t nnz = 0;
  for (size_t c = 0; c < nc; ++c)
    for (const auto& [r, v] : bm.col[c])
      if (v != 0) {
        row[r].emplace_back(static_cast<uint32_t>(c), Int(v));
        col_list[c].push_back(static_cast<uint32_t>(r));
        ++col_count[c];
        ++nnz;
      }
  for (auto& rw : row)
    std::sort(rw.begin(), rw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

  auto find_in_row = [&](size_t r, uint32_t c) {
    auto& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const auto& e, uint32_t key) { return e.first < key; });
    return (it != rw.end() && it->first == c) ? it : rw.end();
  };
  struct Cand {
    size_t cost;
    uint32_t r, c;
    bool operator>(const Cand& o) const { return cost > o.cost; }
  };
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  auto push_unit = [&](uint32_t r, uint32_t c, const Int& v) {
    if (v == 1 || v == -1)
      heap.push({(row[r].size() - 1) * (static_cast<size_t>(col_count[c]) - 1), r, c});
  };
  for (size_t r = 0; r < nr; ++r)
    for (const auto& [c, v] : row[r]) push_unit(static_cast<uint32_t>(r), c, v);

  SmithResult res;
  std::vector<std::pair<uint32_t, Int>> merged;
  while (!heap.empty()) {
    auto [cost, r0, c0] = heap.top();
    heap.pop();
    auto it = find_in_row(r0, c0);
    if (it == row[r0].end() || (it->second != 1 && it->second != -1)) continue;
    size_t now = (row[r0].size() - 1) * (static_cast<size_t>(col_count[c0]) - 1);
    if (now > cost) {  // stale key: re-queue at the true cost
      heap.push({now, r0, c0});
      continue;
    }
    const Int eps = it->second;
    // clear column c0 in every other row using the unit pivot
    std::vector<uint32_t> others;
    others.swap(col_list[c0]);
    for (uint32_t r : others) {
      if (r == r0) continue;
      auto jt = find_in_row(r, c0);
      if (jt == row[r].end()) continue;  // stale list entry
      Int f = checked_mul(jt->second, eps);
      merged.clear();
      merged.reserve(row[r].size() + row[r0].size());
      auto a = row[r].begin(), ae = row[r].end();
      auto b = row[r0].begin(), be = row[r0].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          Int nv = checked_sub(Int(0), checked_mul(f, b->second));
          // fill-in: new entry in column b->first
          ++col_count[b->first];
          col_list[b->first].push_back(r);
          ++nnz;
          push_unit(r, b->first, nv);
          merged.emplace_back(b->first, std::move(nv));
          ++b;
        } else {  // same column
          Int nv = checked_sub(a->second, checked_mul(f, b->second));
          if (nv == 0) {
            --col_count[a->first];
            --nnz;
          } else {
            push_unit(r, a->first, nv);
            merged.emplace_back(a->first, std::move(nv));
          }
          ++a;
          ++b;
        }
      }
      row[r].swap(merged);
      row[r].shrink_to_fit();
    }
    // the pivot row's remaining entries die to column ops touching only this
    // row; drop row r0 and column c0 outright
    for (const auto& [c, v] : row[r0]) {
      --col_count[c];
      --nnz;
    }
    row[r0].clear();
    row[r0].shrink_to_fit();
    col_list[c0].clear();
    col_list[c0].shrink_to_fit();
    res.rank += 1;
#ifdef CPOSET_SMITH_TRACE
    if (res.rank % 4096 == 0)
      std::cerr << "smith: rank=" << res.rank << " nnz=" << nnz
                << " heap=" << heap.size() << std::endl;
#endif
  }

  // dense core
  std::vector<size_t> live_rows, live_cols;
  for (size_t r = 0; r < nr; ++r)
    if (!row[r].empty()) live_rows.push_back(r);
  for (size_t c = 0; c < nc; ++c)
    if (col_count[c] > 0) live_cols.push_back(c);
  if (live_rows.size() * live_cols.size() > dense_guard * dense_guard)
    throw std::runtime_error("smith: dense core exceeds guard (" +
                             std::to_string(live_rows.size()) + " x " +
                             std::to_string(live_cols.size()) + ")");
  if (!live_rows.empty()) {
    std::map<size_t, size_t> cidx;
    for (size_t i = 0; i < live_cols.size(); ++i) cidx[live_cols[i]] = i;
    std::vector<std::vector<BigInt>> dense(live_rows.size(),
                                           std::vector<BigInt>(live_cols.size(), 0));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : row[live_rows[i]]) dense[i][cidx[c]] = BigInt(v);
    for (const BigInt& d : dense_snf(std::move(dense))) {
      res.rank += 1;
      if (d > 1) res.torsion.push_back(d);
    }
  }
  return res;
}

}  // namespace detail

inline SmithResult smith(const BoundaryMatrix& bm, size_t dense_guard = 600) {
  try {
    return detail::smith_impl<long long>(bm, dense_guard);
  } catch (const detail::Int64Overflow&) {
    return detail::smith_impl<BigInt>(bm, dense_guard);
  }
}

// --- chain complexes ---

// boundary[k] is the matrix of d_k : C_k -> C_{k-1} in the bases given by
// the sorted simplex lists; d_{k}d_{k+1} = 0 is verified at construction.
struct ChainComplex {
  const SimplicialComplex* complex = nullptr;
  std::vector<BoundaryMatrix> boundary;  // index k >= 1

  int dimension() const { return complex->dimension(); }
};

inline ChainComplex chain_complex(const SimplicialComplex& c) {
  ChainComplex cc;
  cc.complex = &c;
  cc.boundary.resize(std::max(0, c.dimension()) + 1);
  for (int k = 1; k <= c.dimension(); ++k) {
    BoundaryMatrix& m = cc.boundary[k];
    m.rows = c.count(k - 1);
    m.cols = c.count(k);
    m.col.resize(m.cols);
    for (size_t j = 0; j < m.cols; ++j) {
      const auto& s = c.by_dim[k][j];
      std::vector<int> face(s.begin() + 1, s.end());
      long long sign = 1;
      for (size_t drop = 0;; ++drop) {
        long long idx = c.index_of(face);
        if (idx < 0) throw std::logic_error("chain_complex: face missing from complex");
        m.col[j].emplace_back(static_cast<size_t>(idx), sign);
        if (drop + 1 > static_cast<size_t>(k)) break;
        face[drop] = s[drop];
        sign = -sign;
      }
      std::sort(m.col[j].begin(), m.col[j].end());
    }
  }
  // d d = 0, column by column
  for (int k = 2; k <= c.dimension(); ++k)
    for (size_t j = 0; j < cc.boundary[k].cols; ++j) {
      std::map<size_t, long long> acc;
      for (const auto& [f, s] : cc.boundary[k].col[j])
        for (const auto& [g, t] : cc.boundary[k - 1].col[f]) acc[g] += s * t;
      for (const auto& [g, v] : acc)
        if (v != 0) throw std::logic_error("chain_complex: d d != 0");
    }
  return cc;
}

// --- homology ---

struct HomologyResult {
  std::vector<long long> betti;               // reduced Betti numbers, index k
  std::vector<std::vector<BigInt>> torsion;   // torsion coefficients of H_k
  long long euler = 1;                        // unreduced Euler characteristic

  bool reduced_trivial() const {
    for (long long b : betti)
      if (b != 0) return false;
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
  // a wedge of d spheres of dimension r, homologically
  bool is_wedge_of_spheres(int r, const BigInt& d) const {
    for (int k = 0; k < static_cast<int>(betti.size()); ++k)
      if (betti[k] != (k == r ? static_cast<long long>(d) : 0)) {
        if (k == r && BigInt(betti[k]) == d) continue;
        return false;
      }
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
};

// Reduced integral homology of a nonempty complex.
inline HomologyResult homology(const ChainComplex& cc) {
  const SimplicialComplex& c = *cc.complex;
  if (c.dimension() < 0) throw std::invalid_argument("homology: empty complex");
  const int dim = c.dimension();
  std::vector<SmithResult> sm(dim + 1);
  for (int k = 1; k <= dim; ++k) sm[k] = smith(cc.boundary[k]);
  HomologyResult h;
  h.betti.assign(dim + 1, 0);
  h.torsion.assign(dim + 1, {});
  for (int k = 0; k <= dim; ++k) {
    long long rank_k = (k >= 1) ? static_cast<long long>(sm[k].rank) : 0;
    long long rank_k1 = (k + 1 <= dim) ? static_cast<long long>(sm[k + 1].rank) : 0;
    h.betti[k] = static_cast<long long>(c.count(k)) - rank_k - rank_k1;
    if (k + 1 <= dim) h.torsion[k] = sm[k + 1].torsion;
  }
  h.betti[0] -= 1;  // reduce
  h.euler = c.euler_characteristic();
  return h;
}

// Reduced homology computed after a global coreduction pass on the augmented
// chain complex.  A pair (sigma, tau) where tau's boundary contains exactly
// one live cell sigma (or dually, sigma has exactly one live coface tau) is a
// unit Gaussian pivot whose elimination touches no other entry: both cells
// can simply be deleted, coefficients unchanged.  Deletions cascade from the
// augmentation cell (like growing a spanning tree) and typically shrink the
// complex by orders of magnitude; the residual core keeps the exact homology
// including torsion and is handed to the Smith normal form.
struct ReducedComplex {
  int dim = -1;                          // dimension of the original complex
  std::vector<size_t> live;              // live cells per level (-1 at index 0)
  std::vector<BoundaryMatrix> boundary;  // boundary[l]: level l -> level l-1
};

inline ReducedComplex coreduce(const ChainComplex& cc) {
  const SimplicialComplex& c = *cc.complex;
  const int dim = c.dimension();
  if (dim < 0) throw std::invalid_argument("coreduce: empty complex");

  // levels -1..dim; level k stored at index k+1; level 0 is the augmentation
  const int levels = dim + 2;
  std::vector<size_t> count(levels);
  count[0] = 1;
  for (int k = 0; k <= dim; ++k) count[k + 1] = c.count(k);

  // boundary adjacency (cell -> cells one dimension down) and cofaces
  std::vector<std::vector<std::vector<size_t>>> bd(levels), cof(levels);
  for (int l = 0; l < levels; ++l) {
    bd[l].assign(count[l], {});
    cof[l].assign(count[l], {});
  }
  for (size_t v = 0; v < count[1]; ++v) {
    bd[1][v].push_back(0);
    cof[0][0].push_back(v);
  }
  for (int k = 1; k <= dim; ++k)
    for (size_t j = 0; j < count[k + 1]; ++j)
      for (const auto& [i, s] : cc.boundary[k].col[j]) {
        bd[k + 1][j].push_back(i);
        cof[k][i].push_back(j);
      }

  std::vector<std::vector<bool>> alive(levels);
  std::vector<std::vector<uint32_t>> bd_live(levels), cof_live(levels);
  for (int l = 0; l < levels; ++l) {
    alive[l].assign(count[l], true);
    bd_live[l].assign(count[l], 0);
    cof_live[l].assign(count[l], 0);
    for (size_t i = 0; i < count[l]; ++i) {
      bd_live[l][i] = static_cast<uint32_t>(bd[l][i].size());
      cof_live[l][i] = static_cast<uint32_t>(cof[l][i].size());
    }
  }

  // queue entries: (level, index, true = candidate tau with singleton
  // boundary, false = candidate sigma with singleton coface)
  std::vector<std::tuple<int, size_t, bool>> stack;
  for (int l = 0; l < levels; ++l)
    for (size_t i = 0; i < count[l]; ++i) {
      if (bd_live[l][i] == 1) stack.emplace_back(l, i, true);
      if (cof_live[l][i] == 1) stack.emplace_back(l, i, false);
    }

  auto kill = [&](int l, size_t i) {
    alive[l][i] = false;
    for (size_t b : bd[l][i])
      if (alive[l - 1][b] && --cof_live[l - 1][b] == 1) stack.emplace_back(l - 1, b, false);
    for (size_t f : cof[l][i])
      if (alive[l + 1][f] && --bd_live[l + 1][f] == 1) stack.emplace_back(l + 1, f, true);
  };

  while (!stack.empty()) {
    auto [l, i, is_tau] = stack.back();
    stack.pop_back();
    if (!alive[l][i]) continue;
    if (is_tau) {
      if (bd_live[l][i] != 1) continue;
      size_t s = SIZE_MAX;
      for (size_t b : bd[l][i])
        if (alive[l - 1][b]) {
          s = b;
          break;
        }
      alive[l][i] = false;
      alive[l - 1][s] = false;
      kill(l, i);
      kill(l - 1, s);
    } else {
      if (cof_live[l][i] != 1) continue;
      size_t t = SIZE_MAX;
      for (size_t f : cof[l][i])
        if (alive[l + 1][f]) {
          t = f;
          break;
        }
      alive[l][i] = false;
      alive[l + 1][t] = false;
      kill(l, i);
      kill(l + 1, t);
    }
  }

  // residual boundary matrices between live cells, original coefficients
  std::vector<std::vector<size_t>> live_index(levels);
  std::vector<size_t> live_count(levels, 0);
  for (int l = 0; l < levels; ++l) {
    live_index[l].assign(count[l], SIZE_MAX);
    for (size_t i = 0; i < count[l]; ++i)
      if (alive[l][i]) live_index[l][i] = live_count[l]++;
  }

  ReducedComplex red;
  red.dim = dim;
  red.live = live_count;
  red.boundary.resize(levels);
  for (int l = 1; l < levels; ++l) {
    BoundaryMatrix m;
    m.rows = live_count[l - 1];
    m.cols = live_count[l];
    m.col.resize(m.cols);
    if (l == 1) {
      for (size_t v = 0; v < count[1]; ++v)
        if (alive[1][v] && alive[0][0])
          m.col[live_index[1][v]].emplace_back(0, 1);
    } else {
      const int k = l - 1;  // boundary[k] : C_k -> C_{k-1}
      for (size_t j = 0; j < count[l]; ++j) {
        if (!alive[l][j]) continue;
        auto& out = m.col[live_index[l][j]];
        for (const auto& [i, s] : cc.boundary[k].col[j])
          if (alive[l - 1][i]) out.emplace_back(live_index[l - 1][i], s);
      }
    }
    red.boundary[l] = std::move(m);
  }
  return red;
}

inline HomologyResult homology_coreduced(const ChainComplex& cc) {
  ReducedComplex red = coreduce(cc);
  const int dim = red.dim;
  const int levels = dim + 2;
  std::vector<SmithResult> sm(levels);
  for (int l = 1; l < levels; ++l) sm[l] = smith(red.boundary[l]);
  HomologyResult h;
  h.betti.assign(dim + 1, 0);
  h.torsion.assign(dim + 1, {});
  for (int k = 0; k <= dim; ++k) {
    const int l = k + 1;
    long long rank_lo = static_cast<long long>(sm[l].rank);
    long long rank_hi = (l + 1 < levels) ? static_cast<long long>(sm[l + 1].rank) : 0;
    h.betti[k] = static_cast<long long>(red.live[l]) - rank_lo - rank_hi;
    if (l + 1 < levels) h.torsion[k] = sm[l + 1].torsion;
  }
  h.euler = cc.complex->euler_characteristic();
  return h;
}

inline HomologyResult homology_of_poset(const Poset& p) {
  SimplicialComplex c = order_complex(p);
  ChainComplex cc = chain_complex(c);
  return homology_coreduced(cc);
}

// --- explicit chains / cycles ---

// A k-chain as a sparse vector over the sorted k-simplex basis.
struct Chain {
  int dim = 0;
  std::map<size_t, long long> coeff;
};

inline Chain boundary_of(const ChainComplex& cc, const Chain& z) {
  Chain b;
  b.dim = z.dim - 1;
  if (z.dim < 1 || z.dim > cc.dimension()) return b;
  for (const auto& [j, v] : z.coeff)
    for (const auto& [i, s] : cc.boundary[z.dim].col[j]) {
      long long nv = b.coeff[i] + s * v;
      if (nv == 0)
        b.coeff.erase(i);
      else
        b.coeff[i] = nv;
    }
  return b;
}

inline bool is_cycle(const ChainComplex& cc, const Chain& z) {
  return boundary_of(cc, z).coeff.empty();
}

// Exact certificate that z is (not) a boundary: over Q, z is a boundary iff
// appending z as a column to d_{k+1} leaves the rank unchanged; over Z a
// rational non-boundary is an integral non-boundary, which is the direction
// the callers need.
inline bool is_rational_boundary(const ChainComplex& cc, const Chain& z) {
  if (z.coeff.empty()) return true;
  const int k = z.dim;
  BoundaryMatrix base;
  if (k + 1 <= cc.dimension()) base = cc.boundary[k + 1];
  base.rows = cc.complex->count(k);
  base.cols = (k + 1 <= cc.dimension()) ? cc.boundary[k + 1].cols : 0;
  base.col.resize(base.cols);
  size_t r0 = smith(base).rank;
  base.col.emplace_back(z.coeff.begin(), z.coeff.end());
  base.cols += 1;
  return smith(base).rank == r0;
}

// Pushforward of a chain along a simplicial map given on vertices;
// degenerate images vanish, non-degenerate ones pick up the sign of the
// sorting permutation.
inline Chain pushforward(const Chain& z, const SimplicialComplex& src,
                         const SimplicialComplex& dst, const std::vector<size_t>& vertex_map) {
  Chain out;
  out.dim = z.dim;
  for (const auto& [j, v] : z.coeff) {
    std::vector<int> img;
    for (int vert : src.by_dim[z.dim][j]) img.push_back(static_cast<int>(vertex_map[vert]));
    // parity of the sort, bubble style (simplices are tiny)
    long long sign = 1;
    bool degenerate = false;
    for (size_t a = 0; a < img.size() && !degenerate; ++a)
      for (size_t b = a + 1; b < img.size() && !degenerate; ++b) {
        if (img[a] == img[b]) degenerate = true;
        if (img[a] > img[b]) sign = -sign;
      }
    if (degenerate) continue;
    std::sort(img.begin(), img.end());
    long long idx = dst.index_of(img);
    if (idx < 0) throw std::logic_error("pushforward: image simplex missing");
    long long nv = out.coeff[idx] + sign * v;
    if (nv == 0)
      out.coeff.erase(idx);
    else
      out.coeff[idx] = nv;
  }
  return out;
}

// --- fundamental cycle of the subdivided join sphere ---

// The order complex of barycentric(J) for a simplicial sphere J triangulates
// J; the fundamental cycle assigns to each full flag s_0 < ... < s_r the
// orientation of s_r times the parity of the vertex-insertion order.
// J here is the (r+1)-fold join with factor k on vertices {2k, 2k+1} and
// orientation (-1)^{#odd vertices} on top simplices (the cross-polytope
// cycle). The result is verified to be a nonzero cycle before returning.
inline Chain fundamental_cycle_sdJ(const Poset& sphere_poset, const Poset& sd,
                                   const SimplicialComplex& sd_complex,
                                   const ChainComplex& sd_chains) {
  // recover each sd element's underlying vertex set from barycentric()'s
  // construction order: chains sorted by (length, vertices)
  SimplicialComplex jc = order_complex(sphere_poset);
  std::vector<std::vector<int>> simplices;
  for (const auto& level : jc.by_dim) simplices.insert(simplices.end(), level.begin(), level.end());
  std::stable_sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (simplices.size() != sd.size())
    throw std::invalid_argument("fundamental_cycle_sdJ: sd poset does not match the sphere");

  const int r = jc.dimension();
  Chain z;
  z.dim = r;
  for (size_t j = 0; j < sd_complex.count(r); ++j) {
    const auto& flag = sd_complex.by_dim[r][j];  // indices into sd, increasing dims
    const auto& top = simplices[flag[r]];
    if (static_cast<int>(top.size()) != r + 1) continue;  // not a full flag
    bool full = true;
    for (int k = 0; k <= r && full; ++k)
      if (static_cast<int>(simplices[flag[k]].size()) != k + 1) full = false;
    if (!full) continue;
    // orientation of the top simplex of the cross polytope
    long long sign = 1;
    for (int v : top)
      if (v % 2 == 1) sign = -sign;
    // parity of the insertion order: vertex added at step k vs sorted order
    std::vector<int> inserted;
    inserted.push_back(simplices[flag[0]][0]);
    for (int k = 1; k <= r; ++k) {
      const auto& small = simplices[flag[k - 1]];
      for (int v : simplices[flag[k]])
        if (!std::binary_search(small.begin(), small.end(), v)) inserted.push_back(v);
    }
    for (size_t a = 0; a < inserted.size(); ++a)
      for (size_t b = a + 1; b < inserted.size(); ++b)
        if (inserted[a] > inserted[b]) sign = -sign;
    z.coeff[j] = sign;
  }
  if (z.coeff.empty()) throw std::logic_error("fundamental_cycle_sdJ: empty cycle");
  if (!is_cycle(sd_chains, z)) throw std::logic_error("fundamental_cycle_sdJ: boundary is nonzero");
  return z;
}

// --- fundamental group report ---

// Edge-path presentation from a spanning tree plus bounded Tietze
// simplification. Conclusive outcomes: "trivial", "Z", "Z/n", "free of rank
// k"; everything else is reported as inconclusive (never as a
// connectivity claim).
struct Pi1Report {
  bool connected = false;
  bool conclusive = false;
  std::string description;
  size_t generators_left = 0, relators_left = 0;
};

inline Pi1Report pi1_report(const SimplicialComplex& c, size_t budget = 4'000'000) {
  Pi1Report rep;
  if (c.dimension() < 0) return rep;
  const size_t nv = c.count(0);
  // spanning forest over the 1-skeleton
  std::vector<int> comp(nv, -1);
  std::vector<std::vector<std::pair<int, size_t>>> adj(nv);
  for (size_t e = 0; e < c.count(1); ++e) {
    adj[c.by_dim[1][e][0]].push_back({c.by_dim[1][e][1], e});
    adj[c.by_dim[1][e][1]].push_back({c.by_dim[1][e][0], e});
  }
  std::vector<char> tree_edge(c.count(1), 0);
  int ncomp = 0;
  for (size_t s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<int> stack = {static_cast<int>(s)};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u])
        if (comp[v] < 0) {
          comp[v] = ncomp;
          tree_edge[e] = 1;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  rep.connected = (ncomp == 1);
  if (!rep.connected) {
    rep.description = "disconnected (" + std::to_string(ncomp) + " components)";
    return rep;
  }

  // generators: non-tree edges; relators: 2-simplex boundaries
  std::vector<long long> gen_of_edge(c.count(1), 0);  // 0 = tree, else +-(g+1)
  long long ngen = 0;
  for (size_t e = 0; e < c.count(1); ++e)
    if (!tree_edge[e]) gen_of_edge[e] = ++ngen;
  using Word = std::vector<long long>;  // letters +-(g+1)
  std::vector<Word> relators;
  auto edge_letter = [&](int a, int b) -> long long {
    std::vector<int> s = {std::min(a, b), std::max(a, b)};
    long long e = c.index_of(s);
    long long g = gen_of_edge[e];
    return a < b ? g : -g;
  };
  for (size_t t = 0; t < c.count(2); ++t) {
    const auto& s = c.by_dim[2][t];
    Word w;
    for (long long l : {edge_letter(s[0], s[1]), edge_letter(s[1], s[2]), edge_letter(s[2], s[0])})
      if (l != 0) w.push_back(l);
    relators.push_back(std::move(w));
  }

  std::vector<char> gen_alive(ngen + 1, 1);
  auto freely_reduce = [](Word& w) {
    Word out;
    for (long long l : w) {
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
      out.erase(out.begin());
      out.pop_back();
    }
    w = std::move(out);
  };
  size_t steps = 0;
  bool changed = true;
  while (changed && steps < budget) {
    changed = false;
    for (auto& w : relators) freely_reduce(w);
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   relators.end());
    // kill generators forced trivial, substitute length-2 identifications
    for (size_t i = 0; i < relators.size(); ++i) {
      ++steps;
      if (relators[i].size() == 1) {
        long long g = std::abs(relators[i][0]);
        gen_alive[g] = 0;
        for (auto& w : relators)
          w.erase(std::remove_if(w.begin(), w.end(),
                                 [g](long long l) { return std::abs(l) == g; }),
                  w.end());
        changed = true;
        break;
      }
      if (relators[i].size() == 2) {
        long long a = relators[i][0], b = relators[i][1];
        if (std::abs(a) == std::abs(b)) continue;  // g^2: a genuine relation
        // a b = 1  =>  replace b with a^{-1} everywhere
        long long from = std::abs(b);
        gen_alive[from] = 0;
        for (auto& w : relators)
          for (auto& l : w) {
            if (l == b) l = -a;
            if (l == -b) l = a;
          }
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // a generator occurring exactly once overall: its relator defines it
    std::map<long long, std::pair<size_t, size_t>> occ;  // gen -> (count, relator)
    for (size_t i = 0; i < relators.size(); ++i)
      for (long long l : relators[i]) {
        auto& o = occ[std::abs(l)];
        o.first += 1;
        o.second = i;
      }
    for (const auto& [g, o] : occ)
      if (o.first == 1) {
        gen_alive[g] = 0;
        relators.erase(relators.begin() + static_cast<long long>(o.second));
        changed = true;
        break;
      }
  }

  size_t alive = 0;
  for (long long g = 1; g <= ngen; ++g) alive += gen_alive[g];
  rep.generators_left = alive;
  rep.relators_left = relators.size();
  if (alive == 0) {
    rep.conclusive = true;
    rep.description = "trivial";
  } else if (relators.empty()) {
    rep.conclusive = true;
    rep.description = alive == 1 ? "Z" : "free of rank " + std::to_string(alive);
  } else if (alive == 1 && relators.size() == 1) {
    rep.conclusive = true;
    rep.description = "Z/" + std::to_string(relators[0].size());
  } else {
    rep.description = "inconclusive: " + std::to_string(alive) + " generators, " +
                      std::to_string(relators.size()) + " relators";
  }
  return rep;
}

// --- matrix export (coordinate text format: rows cols nnz, then triples) ---

inline std::string boundary_to_string(const BoundaryMatrix& m) {
  std::string out = std::to_string(m.rows) + " " + std::to_string(m.cols) + " " +
                    std::to_string(m.nnz()) + "\n";
  for (size_t j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[j])
      out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace cposet
