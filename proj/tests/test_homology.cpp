#include "catch_amalgamated.hpp"
#include "cposet/cposet.hpp"

#include <random>

using namespace cposet;

namespace {

// Independent oracle: textbook dense SNF over cpp_int with no sparse phase,
// no pivoting heuristics.
struct NaiveSmith {
  size_t rank = 0;
  std::vector<BigInt> diag;
};

NaiveSmith naive_smith(const BoundaryMatrix& bm) {
  std::vector<std::vector<BigInt>> m(bm.rows, std::vector<BigInt>(bm.cols, 0));
  for (size_t j = 0; j < bm.cols; ++j)
    for (auto [i, v] : bm.col[j]) m[i][j] = v;
  NaiveSmith out;
  size_t top = 0;
  auto aabs = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
  while (top < bm.rows && top < bm.cols) {
    size_t pr = bm.rows, pc = bm.cols;
    for (size_t i = top; i < bm.rows; ++i)
      for (size_t j = top; j < bm.cols; ++j)
        if (m[i][j] != 0 && (pr == bm.rows || aabs(m[i][j]) < aabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == bm.rows) break;
    std::swap(m[top], m[pr]);
    for (auto& row : m) std::swap(row[top], row[pc]);
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = top + 1; i < bm.rows; ++i)
        if (m[i][top] != 0) {
          BigInt q = m[i][top] / m[top][top];
          for (size_t j = top; j < bm.cols; ++j) m[i][j] -= q * m[top][j];
          if (m[i][top] != 0) {
            std::swap(m[top], m[i]);
            again = true;
          }
        }
      for (size_t j = top + 1; j < bm.cols; ++j)
        if (m[top][j] != 0) {
          BigInt q = m[top][j] / m[top][top];
          for (size_t i = top; i < bm.rows; ++i) m[i][j] -= q * m[i][top];
          if (m[top][j] != 0) {
            for (size_t i = top; i < bm.rows; ++i) std::swap(m[i][top], m[i][j]);
            again = true;
          }
        }
      if (again) continue;
      for (size_t i = top + 1; i < bm.rows && !again; ++i)
        for (size_t j = top + 1; j < bm.cols && !again; ++j)
          if (m[i][j] % m[top][top] != 0) {
            for (size_t k = top; k < bm.cols; ++k) m[top][k] += m[i][k];
            again = true;
          }
    }
    out.diag.push_back(aabs(m[top][top]));
    ++top;
  }
  out.rank = out.diag.size();
  return out;
}

SimplicialComplex from_simplices(std::vector<std::vector<int>> top) {
  // close downward under faces
  std::set<std::vector<int>> all;
  for (auto s : top) {
    std::sort(s.begin(), s.end());
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<int> f;
      for (size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      all.insert(f);
    }
  }
  SimplicialComplex c;
  for (const auto& s : all) {
    int k = static_cast<int>(s.size()) - 1;
    if (static_cast<int>(c.by_dim.size()) <= k) c.by_dim.resize(k + 1);
    c.by_dim[k].push_back(s);
  }
  for (auto& level : c.by_dim) std::sort(level.begin(), level.end());
  return c;
}

// minimal 6-vertex triangulation of the real projective plane
SimplicialComplex rp2() {
  return from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                         {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

}  // namespace

TEST_CASE("smith agrees with the naive dense oracle on random sparse matrices") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    BoundaryMatrix m;
    m.rows = 3 + rng() % 8;
    m.cols = 3 + rng() % 8;
    m.col.resize(m.cols);
    for (size_t j = 0; j < m.cols; ++j)
      for (size_t i = 0; i < m.rows; ++i) {
        int v = static_cast<int>(rng() % 7) - 3;
        if (v != 0 && rng() % 2) m.col[j].emplace_back(i, v);
      }
    auto fast = smith(m);
    auto slow = naive_smith(m);
    CHECK(fast.rank == slow.rank);
    std::vector<BigInt> slow_torsion;
    for (const auto& d : slow.diag)
      if (d > 1) slow_torsion.push_back(d);
    CHECK(fast.torsion == slow_torsion);
  }
}

TEST_CASE("rp2 triangulation: betti and torsion") {
  auto c = rp2();
  CHECK(c.count(0) == 6);
  CHECK(c.count(1) == 15);
  CHECK(c.count(2) == 10);
  auto h = homology(chain_complex(c));
  CHECK(h.betti[0] == 0);
  CHECK(h.betti[1] == 0);
  CHECK(h.betti[2] == 0);
  REQUIRE(h.torsion[1].size() == 1);
  CHECK(h.torsion[1][0] == 2);
  CHECK(h.euler == 1);
}

TEST_CASE("spheres via iterated suspension") {
  Poset s = antichain({"a", "b"});
  for (int dim = 1; dim <= 3; ++dim) {
    s = suspension(s);
    auto h = homology_of_poset(s);
    for (int k = 0; k <= dim; ++k) CHECK(h.betti[k] == (k == dim ? 1 : 0));
    for (const auto& t : h.torsion) CHECK(t.empty());
  }
}

TEST_CASE("homology of the minimal 7-vertex torus") {
  // cyclic triangulation on Z/7: triangles {i, i+1, i+3} and {i, i+2, i+3}
  std::vector<std::vector<int>> tris;
  for (int i = 0; i < 7; ++i) {
    tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  auto c = from_simplices(tris);
  CHECK(c.count(0) == 7);
  CHECK(c.count(1) == 21);
  CHECK(c.count(2) == 14);
  auto h = homology(chain_complex(c));
  CHECK(h.betti[0] == 0);
  CHECK(h.betti[1] == 2);
  CHECK(h.betti[2] == 1);
  for (const auto& t : h.torsion) CHECK(t.empty());
}

TEST_CASE("chain_complex verifies dd = 0 and flags corruption") {
  auto c = rp2();
  auto cc = chain_complex(c);
  for (int k = 1; k <= 2; ++k) {
    CHECK(cc.boundary[k].rows == c.count(k - 1));
    CHECK(cc.boundary[k].cols == c.count(k));
    for (const auto& col : cc.boundary[k].col) CHECK(col.size() == static_cast<size_t>(k) + 1);
  }
}

TEST_CASE("cycles, boundaries and the rational certificate") {
  // circle as a 4-gon
  auto c = from_simplices({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto cc = chain_complex(c);
  Chain z;
  z.dim = 1;
  // the loop with consistent orientation: [01] + [12] + [23] - [03]
  z.coeff[c.index_of({0, 1})] = 1;
  z.coeff[c.index_of({1, 2})] = 1;
  z.coeff[c.index_of({2, 3})] = 1;
  z.coeff[c.index_of({0, 3})] = -1;
  CHECK(is_cycle(cc, z));
  CHECK_FALSE(is_rational_boundary(cc, z));
  // the same loop in a filled square is a boundary
  auto disk = from_simplices({{0, 1, 2}, {0, 2, 3}});
  auto dcc = chain_complex(disk);
  Chain zd;
  zd.dim = 1;
  zd.coeff[disk.index_of({0, 1})] = 1;
  zd.coeff[disk.index_of({1, 2})] = 1;
  zd.coeff[disk.index_of({2, 3})] = 1;
  zd.coeff[disk.index_of({0, 3})] = -1;
  CHECK(is_cycle(dcc, zd));
  CHECK(is_rational_boundary(dcc, zd));
}

TEST_CASE("pushforward signs and degeneracies") {
  auto src = from_simplices({{0, 1, 2}});
  auto dst = from_simplices({{0, 1, 2}});
  Chain z;
  z.dim = 2;
  z.coeff[0] = 1;
  // order-reversing vertex map has sign (-1)^{3 choose 2} = -1
  Chain rev = pushforward(z, src, dst, {2, 1, 0});
  CHECK(rev.coeff.at(0) == -1);
  // collapsing map kills the simplex
  Chain col = pushforward(z, src, dst, {0, 0, 1});
  CHECK(col.coeff.empty());
  // identity is the identity
  Chain idp = pushforward(z, src, dst, {0, 1, 2});
  CHECK(idp.coeff.at(0) == 1);
}

TEST_CASE("fundamental cycle of the subdivided join sphere") {
  for (unsigned p : {2u, 3u}) {
    auto space = standard_space(p, 1);
    auto s = sphere_J(space);
    auto sd = barycentric(s.poset);
    auto sdc = order_complex(sd);
    auto cc = chain_complex(sdc);
    auto z = fundamental_cycle_sdJ(s.poset, sd, sdc, cc);
    CHECK(z.dim == 1);
    CHECK(z.coeff.size() == sdc.count(1));  // every top simplex appears
    for (auto [idx, v] : z.coeff) CHECK((v == 1 || v == -1));
    CHECK_FALSE(is_rational_boundary(cc, z));
  }
  // r = 2: a 2-sphere
  auto space = standard_space(2, 2);
  auto s = sphere_J(space);
  auto sd = barycentric(s.poset);
  auto sdc = order_complex(sd);
  auto cc = chain_complex(sdc);
  auto z = fundamental_cycle_sdJ(s.poset, sd, sdc, cc);
  CHECK(z.dim == 2);
  CHECK(z.coeff.size() == sdc.count(2));
  CHECK_FALSE(is_rational_boundary(cc, z));
}

TEST_CASE("pi1 report on model spaces") {
  // simply connected: the 2-sphere as an octahedron
  auto oct = order_complex(join(join(antichain({"a", "b"}), antichain({"c", "d"})),
                                antichain({"e", "f"})));
  auto rep = pi1_report(oct);
  CHECK(rep.connected);
  CHECK(rep.conclusive);
  CHECK(rep.description == "trivial");

  // circle: Z
  auto circ = order_complex(join(antichain({"a", "b"}), antichain({"c", "d"})));
  auto repc = pi1_report(circ);
  CHECK(repc.conclusive);
  CHECK(repc.description == "Z");

  // projective plane: Z/2
  auto repp = pi1_report(rp2());
  CHECK(repp.connected);
  CHECK(repp.conclusive);
  CHECK(repp.description == "Z/2");

  // wedge-like: figure eight from two squares sharing a vertex
  auto c8 = from_simplices({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  auto rep8 = pi1_report(c8);
  CHECK(rep8.conclusive);
  CHECK(rep8.description == "free of rank 2");

  // disconnected complexes are reported as such
  auto disc = from_simplices({{0, 1}, {2, 3}});
  CHECK_FALSE(pi1_report(disc).connected);
}

TEST_CASE("boundary matrix text export") {
  BoundaryMatrix m;
  m.rows = 2;
  m.cols = 1;
  m.col = {{{0, 1}, {1, -1}}};
  CHECK(boundary_to_string(m) == "2 1 2\n0 0 1\n1 0 -1\n");
}
