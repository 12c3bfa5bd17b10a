#include <doctest.h>

#include "latcon/birkhoff.hpp"
#include "latcon/congruence.hpp"
#include "latcon/rectangular.hpp"
#include "oracles.hpp"

using namespace latcon;

TEST_CASE("bounded hom validation") {
  auto c2 = chain(2), c3 = chain(3);
  CHECK_NOTHROW(make_bounded_hom(c3, c2, {0, 0, 1}));
  CHECK_NOTHROW(make_bounded_hom(c3, c2, {0, 1, 1}));
  CHECK_THROWS_AS(make_bounded_hom(c3, c2, {0, 0, 0}), Error);
  CHECK_THROWS_AS(make_bounded_hom(m3(), c2, {0, 0, 0, 0, 1}), Error);
  auto sq = direct_product(c2, c2);
  try {
    make_bounded_hom(sq, c2, {0, 1, 1, 1});
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_homomorphic);
  }
}

TEST_CASE("spec") {
  auto sq = direct_product(chain(2), chain(2));
  CHECK(spec(sq, 3) == ElementSet{1, 2});
  CHECK(spec(sq, 0).empty());
}

TEST_CASE("hom counts match the oracle and isotone counts") {
  std::vector<FiniteLattice> ds{chain(2),
                                chain(3),
                                direct_product(chain(2), chain(2)),
                                direct_product(chain(3), chain(3)),
                                congruence_lattice(s7().lattice).lattice()};
  for (auto const& D : ds) {
    for (auto const& E : ds) {
      auto homs = bounded_homs(D, E);
      CHECK(homs.size() == oracle::bounded_homs(D, E).size());
      CHECK(homs.size()
            == oracle::isotone_count(join_irreducibles(E).order,
                                     join_irreducibles(D).order));
      for (auto const& h : homs) {
        CHECK(brt_report(h).ok());
      }
    }
  }
}

TEST_CASE("Con S7 endomorphisms") {
  auto D = congruence_lattice(s7().lattice).lattice();
  CHECK(bounded_homs(D, D).size() == 11);
}

TEST_CASE("injective and surjective correspondences") {
  auto c2 = chain(2), c3 = chain(3);
  auto emb = make_bounded_hom(c2, c3, {0, 2});
  auto r   = brt_report(emb);
  CHECK(r.injective);
  CHECK(r.ji_onto);
  CHECK_FALSE(r.surjective);
  CHECK_FALSE(r.ji_embedding);
  auto proj = make_bounded_hom(c3, c2, {0, 1, 1});
  auto s    = brt_report(proj);
  CHECK(s.surjective);
  CHECK(s.ji_embedding);
  CHECK(s.ok());
}
