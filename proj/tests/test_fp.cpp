#include "catch_amalgamated.hpp"
#include "cposet/cposet.hpp"

#include <sstream>

using namespace cposet;

TEST_CASE("field spec accepts primes only") {
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(3));
  CHECK_NOTHROW(FieldSpec(97));
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(91), std::invalid_argument);  // 7 * 13
  CHECK_THROWS_AS(FieldSpec(101), std::invalid_argument); // above the guard
}

TEST_CASE("modular inverse against brute force") {
  for (unsigned p : {2u, 3u, 5u, 7u, 97u})
    for (unsigned a = 1; a < p; ++a) {
      unsigned inv = fp_inv(a, p);
      CHECK(inv < p);
      CHECK((a * inv) % p == 1);
    }
  CHECK_THROWS_AS(fp_inv(0, 5), std::domain_error);
}

TEST_CASE("rref produces canonical representatives") {
  // the same plane through two different spanning sets
  auto s1 = canonicalize(3, 3, {{1, 2, 0}, {0, 1, 1}});
  auto s2 = canonicalize(3, 3, {{1, 0, 1}, {2, 1, 0}, {1, 2, 0}});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.pivots == std::vector<unsigned>{0, 1});
  // RREF rows have unit pivots and zeros above them
  for (size_t i = 0; i < s1.basis.size(); ++i) {
    CHECK(s1.basis[i][s1.pivots[i]] == 1);
    for (size_t j = 0; j < s1.basis.size(); ++j)
      if (j != i) CHECK(s1.basis[j][s1.pivots[i]] == 0);
  }
}

TEST_CASE("membership and reduce_mod") {
  auto a = canonicalize(5, 4, {{1, 0, 2, 3}, {0, 1, 1, 1}});
  for (const auto& v : enumerate_vectors(a)) {
    CHECK(member(v, a));
    CHECK(reduce_mod(v, a) == FpVector(4, 0));
  }
  CHECK_FALSE(member({0, 0, 1, 0}, a));
  // a coset representative is stable under re-reduction
  FpVector w = {1, 2, 3, 4};
  FpVector r = reduce_mod(w, a);
  CHECK(reduce_mod(r, a) == r);
  CHECK(member(vec_sub(w, r, 5), a));
}

TEST_CASE("subspace counting sanity: lines of F_3^3") {
  // (3^3 - 1) / (3 - 1) = 13 lines
  std::set<std::vector<FpVector>> lines;
  for (const auto& v : enumerate_ambient(3, 3)) {
    if (vec_is_zero(v)) continue;
    lines.insert(canonicalize(3, 3, {v}).basis);
  }
  CHECK(lines.size() == 13);
}

TEST_CASE("kernel and intersection") {
  // kernel of (x, y, z) -> x + y + z over F_2 is a plane
  Subspace k = kernel({{1, 1, 1}}, 2, 3);
  CHECK(k.dim() == 2);
  for (const auto& v : enumerate_vectors(k)) CHECK((v[0] + v[1] + v[2]) % 2 == 0);

  auto a = canonicalize(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto b = canonicalize(2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  auto c = intersect(a, b);
  CHECK(c == canonicalize(2, 4, {{0, 1, 0, 0}}));
  // oracle: pointwise intersection
  for (const auto& v : enumerate_ambient(2, 4))
    CHECK(member(v, c) == (member(v, a) && member(v, b)));
}

TEST_CASE("span_sum and dimension formula") {
  for (unsigned p : {2u, 3u}) {
    auto a = canonicalize(p, 4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
    auto b = canonicalize(p, 4, {{1, 1, 1, 0}, {0, 0, 0, 1}});
    auto s = span_sum(a, b);
    auto i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(contains(s, a));
    CHECK(contains(s, b));
  }
}

TEST_CASE("quotient map: kernel, surjectivity, section") {
  auto a = canonicalize(3, 4, {{1, 0, 2, 1}});
  QuotientMap q = quotient_coords(a);
  CHECK(q.target_dim() == 3);
  std::set<FpVector> image;
  for (const auto& v : enumerate_ambient(3, 4)) {
    FpVector w = q.apply(v);
    image.insert(w);
    CHECK(q.apply(q.lift(w)) == w);
    CHECK((q.apply(v) == FpVector(3, 0)) == member(v, a));
  }
  CHECK(image.size() == 27);
  // linearity
  for (const auto& v : enumerate_vectors(canonicalize(3, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}})))
    for (const auto& w : enumerate_vectors(a))
      CHECK(q.apply(vec_add(v, w, 3)) == q.apply(v));
}

TEST_CASE("subspace text round trip") {
  auto a = canonicalize(5, 3, {{1, 2, 3}, {0, 1, 4}});
  std::istringstream in(subspace_to_string(a));
  CHECK(subspace_from_stream(in, 5, 3) == a);
  CHECK_THROWS_AS(vector_from_string("105", 5), std::invalid_argument);
  CHECK_THROWS_AS(vector_from_string("12", 2), std::invalid_argument);
}

TEST_CASE("enumerate_vectors hits every vector exactly once") {
  auto a = canonicalize(5, 3, {{1, 0, 2}, {0, 1, 3}});
  auto vs = enumerate_vectors(a);
  CHECK(vs.size() == 25);
  std::set<FpVector> uniq(vs.begin(), vs.end());
  CHECK(uniq.size() == 25);
}
