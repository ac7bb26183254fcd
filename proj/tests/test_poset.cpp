#include "catch_amalgamated.hpp"
#include "cposet/cposet.hpp"

using namespace cposet;

namespace {

// divisors of 12 ordered by divisibility; a handy concrete poset
Poset divisor_poset() {
  std::vector<int> d = {1, 2, 3, 4, 6, 12};
  std::vector<std::string> labels;
  for (int x : d) labels.push_back(std::to_string(x));
  return make_poset(labels, [d](size_t i, size_t j) { return d[i] != d[j] && d[j] % d[i] == 0; });
}

}  // namespace

TEST_CASE("make_poset validates its axioms") {
  CHECK_NOTHROW(divisor_poset());
  // not a linear extension: a strict pair pointing backwards
  CHECK_THROWS_AS(make_poset({"a", "b"}, [](size_t i, size_t j) { return i == 1 && j == 0; }),
                  std::logic_error);
  // broken transitivity: 0<1, 1<2 but not 0<2
  CHECK_THROWS_AS(make_poset({"a", "b", "c"},
                             [](size_t i, size_t j) { return j == i + 1; }),
                  std::logic_error);
}

TEST_CASE("terminal and initial elements") {
  auto p = divisor_poset();
  CHECK(has_terminal(p));  // 12
  CHECK(has_initial(p));   // 1
  auto sub = induced_subposet(p, {1, 2, 3, 4});  // 2, 3, 4, 6
  CHECK_FALSE(has_terminal(sub));
  CHECK_FALSE(has_initial(sub));
  CHECK_FALSE(has_terminal(antichain({"a", "b"})));
}

TEST_CASE("order complex of a chain is a full simplex") {
  auto chain = make_poset({"a", "b", "c", "d"}, [](size_t i, size_t j) { return i < j; });
  auto c = order_complex(chain);
  CHECK(c.dimension() == 3);
  // binomial counts
  CHECK(c.count(0) == 4);
  CHECK(c.count(1) == 6);
  CHECK(c.count(2) == 4);
  CHECK(c.count(3) == 1);
  CHECK(c.euler_characteristic() == 1);
}

TEST_CASE("order complex of divisor poset: chain counts by brute force") {
  auto p = divisor_poset();
  auto c = order_complex(p);
  // oracle: count strict chains directly from the relation
  size_t chains1 = 0, chains2 = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j) {
      if (p.less(i, j)) ++chains1;
      for (size_t k = 0; k < p.size(); ++k)
        if (p.less(i, j) && p.less(j, k)) ++chains2;
    }
  CHECK(c.count(1) == chains1);
  CHECK(c.count(2) == chains2);
  // a poset with a terminal element is contractible; chi must be 1
  CHECK(c.euler_characteristic() == 1);
}

TEST_CASE("join and suspension") {
  auto two = antichain({"p", "q"});
  auto s0 = antichain({"a", "b"});
  auto circle4 = join(s0, two);  // S^0 * S^0: boundary of a square
  auto c = order_complex(circle4);
  CHECK(c.count(0) == 4);
  CHECK(c.count(1) == 4);
  CHECK(c.euler_characteristic() == 0);
  auto h = homology_of_poset(circle4);
  CHECK(h.betti[1] == 1);
  CHECK(h.betti[0] == 0);

  // suspension of the circle: S^2
  auto sus = suspension(circle4);
  auto hs = homology_of_poset(sus);
  CHECK(hs.betti[0] == 0);
  CHECK(hs.betti[1] == 0);
  CHECK(hs.betti[2] == 1);
}

TEST_CASE("barycentric subdivision preserves homotopy type") {
  auto s0 = antichain({"a", "b"});
  auto circle = join(s0, antichain({"p", "q"}));
  auto sd = barycentric(circle);
  CHECK(sd.size() == 8);  // 4 vertices + 4 edges
  auto h = homology_of_poset(sd);
  CHECK(h.betti[0] == 0);
  CHECK(h.betti[1] == 1);
  // the double subdivision too
  auto sd2 = barycentric(sd);
  CHECK(homology_of_poset(sd2).betti[1] == 1);
}

TEST_CASE("poset maps: verification and fibers") {
  auto p = divisor_poset();
  auto pt = antichain({"*"});
  // constant map is order-preserving
  auto c = make_poset_map(p, pt, std::vector<size_t>(p.size(), 0));
  auto f = fiber(c, 0, FiberSide::under);
  CHECK(f.size() == p.size());
  // a non-monotone map is rejected
  auto two_chain = make_poset({"0", "1"}, [](size_t i, size_t j) { return i == 0 && j == 1; });
  CHECK_THROWS_AS(make_poset_map(two_chain, two_chain, std::vector<size_t>{1, 0}),
                  std::logic_error);
  // identity fibers: f/<=y is the principal downset
  auto id = make_poset_map(p, p, {0, 1, 2, 3, 4, 5});
  auto down = fiber(id, 4, FiberSide::under);  // divisors of 6: 1,2,3,6
  CHECK(down.size() == 4);
  CHECK(has_terminal(down));
}

TEST_CASE("sphere_J triangulates an r-sphere") {
  for (unsigned p : {2u, 3u}) {
    for (unsigned r : {1u, 2u}) {
      auto space = standard_space(p, r);
      auto s = sphere_J(space);
      CHECK(s.poset.size() == 2 * (r + 1));
      auto h = homology_of_poset(s.poset);
      for (unsigned k = 0; k <= r; ++k) CHECK(h.betti[k] == (k == r ? 1 : 0));
      // x is the sum of all x_i + xbar_i, xbar is zero
      FpVector sum(space.dim(), 0);
      for (unsigned i = 1; i <= r; ++i)
        sum = vec_add(sum, vec_add(space.x(i), space.xbar(i), p), p);
      CHECK(s.vertex_vector[0] == sum);
      CHECK(vec_is_zero(s.vertex_vector[1]));
    }
  }
}

TEST_CASE("complex text export") {
  auto chain = make_poset({"a", "b"}, [](size_t i, size_t j) { return i < j; });
  CHECK(complex_to_string(order_complex(chain)) == "0 0\n0 1\n1 0 1\n");
}
