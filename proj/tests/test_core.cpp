#include <doctest.h>

#include "latcon/core.hpp"

using namespace latcon;

TEST_CASE("chain and product basics") {
  auto c3 = chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.bottom() == 0);
  CHECK(c3.top() == 2);
  CHECK(height(c3) == 2);

  auto sq = direct_product(chain(2), chain(2));
  CHECK(sq.size() == 4);
  CHECK(sq.meet(1, 2) == 0);
  CHECK(sq.join(1, 2) == 3);
  // first factor first in the planar order
  CHECK(sq.upper_covers(0) == std::vector<Element>{2, 1});
  CHECK(is_distributive(sq));
}

TEST_CASE("m3 and n5 predicates") {
  auto p = predicates(m3());
  CHECK(p.modular);
  CHECK_FALSE(p.distributive);
  CHECK(p.semimodular);

  auto q = predicates(n5());
  CHECK_FALSE(q.modular);
  CHECK_FALSE(q.semimodular);
  CHECK_FALSE(q.lower_semimodular);
}

TEST_CASE("validation errors") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::parse_error;
  };
  CHECK(kind([] { make_lattice(0, {}); }) == ErrorKind::zero_size);
  CHECK(kind([] { make_lattice(3, {{0, 1}, {1, 2}, {2, 0}}); }) == ErrorKind::cyclic);
  CHECK(kind([] { make_lattice(3, {{0, 1}, {1, 2}, {0, 2}}); })
        == ErrorKind::not_reduced);
  CHECK(kind([] { make_lattice(3, {{0, 1}, {0, 2}}); }) == ErrorKind::not_a_lattice);
  // two maximal pairs of lower bounds
  CHECK(kind([] {
          make_lattice(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
        })
        == ErrorKind::not_a_lattice);
  CHECK(kind([] { chain(3).check(3); }) == ErrorKind::element_out_of_range);
}

TEST_CASE("ideals, filters and convexity") {
  auto sq = direct_product(chain(3), chain(3));
  auto [down, up] = ideal_filter(sq, 4);
  CHECK(down == ElementSet{0, 1, 3, 4});
  CHECK(up == ElementSet{4, 5, 7, 8});
  CHECK(is_ideal(sq, down));
  CHECK(is_filter(sq, up));
  CHECK_FALSE(is_filter(sq, down));
  CHECK(is_convex_sublattice(sq, ElementSet{1, 2, 4, 5}));
  CHECK_FALSE(is_convex_sublattice(sq, ElementSet{0, 8}));
  CHECK(is_sublattice(sq, ElementSet{0, 8}));
  CHECK_THROWS_AS(is_convex_sublattice(sq, ElementSet{}), Error);
}

TEST_CASE("join-irreducibles and Birkhoff down-set lattice") {
  auto sq = direct_product(chain(3), chain(2));
  auto ji = join_irreducibles(sq);
  CHECK(ji.elements.size() == 3);

  auto d = downset_lattice(ji.order);
  CHECK(d.lattice.size() == sq.size());
  CHECK(is_isomorphic(d.lattice, sq));
  CHECK(d.members.front().empty());
}

TEST_CASE("isomorphism") {
  auto a = direct_product(chain(2), chain(3));
  auto b = direct_product(chain(3), chain(2));
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso);
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      CHECK(a.leq(x, y) == b.leq((*iso)[x], (*iso)[y]));
    }
  }
  CHECK_FALSE(is_isomorphic(m3(), n5()));
  CHECK(invariant_signature(a) == invariant_signature(b));
}

TEST_CASE("dual and glued sum") {
  auto d = dual(n5());
  CHECK(is_isomorphic(d, n5()));
  CHECK(dual(d) == n5());

  auto g = glued_sum(chain(2), m3());
  CHECK(g.size() == 6);
  CHECK(height(g) == 3);
}

TEST_CASE("sublattice") {
  auto sq = direct_product(chain(3), chain(3));
  auto s  = sublattice(sq, ElementSet{4, 5, 7, 8});
  CHECK(s.size() == 4);
  CHECK(is_isomorphic(s, direct_product(chain(2), chain(2))));
}
