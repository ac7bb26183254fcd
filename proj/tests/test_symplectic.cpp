#include "catch_amalgamated.hpp"
#include "cposet/cposet.hpp"

using namespace cposet;

TEST_CASE("standard form is alternating and non-degenerate") {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned r : {1u, 2u}) {
      auto s = standard_space(p, r);
      CHECK(s.form.radical.dim() == 0);
      for (unsigned i = 1; i <= r; ++i) {
        CHECK(s.form.eval(s.x(i), s.xbar(i)) == 1);
        CHECK(s.form.eval(s.xbar(i), s.x(i)) == p - 1);
        CHECK(s.form.eval(s.x(i), s.x(i)) == 0);
      }
      // bilinearity spot check
      auto u = s.x(1), v = s.xbar(1);
      for (const auto& w : enumerate_ambient(p, s.dim()))
        CHECK(s.form.eval(vec_add(u, w, p), v) ==
              (s.form.eval(u, v) + s.form.eval(w, v)) % p);
    }
}

TEST_CASE("degenerate form: radical has the right dimension") {
  auto s = standard_space(2, 2, 1);
  CHECK(s.dim() == 5);
  CHECK(s.form.radical.dim() == 1);
  // the radical is exactly the last coordinate axis
  CHECK(member({0, 0, 0, 0, 1}, s.form.radical));
  auto t = standard_space(3, 1, 2);
  CHECK(t.form.radical.dim() == 2);
}

TEST_CASE("make_form rejects non-alternating data") {
  CHECK_THROWS_AS(make_form(3, {{1, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_form(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_NOTHROW(make_form(2, {{0, 1}, {1, 0}}));  // -1 = 1 mod 2
}

TEST_CASE("perp: dimension, double perp, pointwise oracle") {
  for (unsigned p : {2u, 3u}) {
    auto s = standard_space(p, 2);
    auto a = canonicalize(p, 4, {s.x(1), s.x(2)});
    auto ap = perp(s, a);
    CHECK(ap.dim() == s.dim() - a.dim());
    CHECK(perp(s, ap) == a);
    for (const auto& w : enumerate_ambient(p, 4)) {
      bool orth = true;
      for (const auto& g : a.basis)
        if (s.form.eval(w, g) != 0) orth = false;
      CHECK(member(w, ap) == orth);
    }
  }
}

TEST_CASE("perp in a degenerate space contains the radical") {
  auto s = standard_space(2, 1, 1);
  auto a = canonicalize(2, 3, {s.x(1)});
  auto ap = perp(s, a);
  CHECK(contains(ap, s.form.radical));
  CHECK(ap.dim() == 2);  // <x1, rad>
}

TEST_CASE("isotropic counts match the closed formula") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned r : {1u, 2u}) {
      auto s = standard_space(p, r);
      for (unsigned j = 0; j <= r; ++j)
        CHECK(BigInt(enumerate_isotropic(s, j).size()) == n_isotropic(p, r, j));
    }
  }
  // spot value: Lagrangians of a 4-dimensional space over F_2
  CHECK(enumerate_isotropic(standard_space(2, 2), 2).size() == 15);
}

TEST_CASE("enumerated isotropic subspaces are isotropic and exhaustive") {
  auto s = standard_space(2, 2);
  auto lines = enumerate_isotropic(s, 1);
  // oracle: brute force over all lines
  size_t brute = 0;
  std::set<std::vector<FpVector>> seen;
  for (const auto& v : enumerate_ambient(2, 4)) {
    if (vec_is_zero(v)) continue;
    auto l = canonicalize(2, 4, {v});
    if (seen.insert(l.basis).second && s.form.eval(v, v) == 0) ++brute;
  }
  CHECK(lines.size() == brute);
  for (const auto& l : lines) CHECK(is_isotropic(s, l));
  // sorted and duplicate-free
  for (size_t i = 0; i + 1 < lines.size(); ++i) CHECK(subspace_less(lines[i], lines[i + 1]));
}

TEST_CASE("isotropic enumeration in a degenerate space") {
  // V' = V + radical of dimension 1: isotropic subspaces may use the radical
  auto s = standard_space(2, 1, 1);
  auto all = enumerate_isotropic_all(s);
  // brute force: all subspaces on which the form vanishes
  size_t brute = 0;
  for (const auto& sub : proper_subspaces(full_space(2, 3)))
    if (is_isotropic(s, sub)) ++brute;
  if (is_isotropic(s, full_space(2, 3))) ++brute;
  CHECK(all.size() == brute);
}
