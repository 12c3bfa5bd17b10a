#include <doctest.h>

#include <algorithm>

#include "latcon/congruence.hpp"
#include "latcon/rectangular.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {
  std::vector<std::vector<Element>> labels_of(ConLattice const& con) {
    std::vector<std::vector<Element>> out;
    for (auto const& c : con.congruences()) {
      out.push_back(c.labels());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<Element>> sorted(std::vector<std::vector<Element>> v) {
    std::sort(v.begin(), v.end());
    return v;
  }
}  // namespace

TEST_CASE("partition basics") {
  auto a = Congruence::from_blocks(4, {{0, 1}, {2, 3}});
  CHECK(a.number_of_blocks() == 2);
  CHECK(a.same_block(2, 3));
  CHECK_FALSE(a.same_block(1, 2));
  CHECK(Congruence::identity(4).refines(a));
  CHECK(a.refines(Congruence::all(4)));
  CHECK_THROWS_AS(Congruence::from_blocks(4, {{0, 1}, {1, 2, 3}}), Error);
  CHECK_THROWS_AS(Congruence::from_blocks(4, {{0, 1}}), Error);
  auto b = Congruence::from_blocks(4, {{0}, {1, 2}, {3}});
  CHECK(congruence_join(a, b).is_all());
  CHECK(congruence_meet(a, b).is_identity());
}

TEST_CASE("principal congruences") {
  auto sq = direct_product(chain(2), chain(2));
  auto a  = principal_congruence(sq, 0, 2);
  CHECK(a.blocks() == std::vector<ElementSet>{{0, 2}, {1, 3}});
  CHECK(principal_congruence(m3(), 0, 1).is_all());
  auto n = n5();
  // collapsing the long side's lower edge
  auto c = principal_congruence(n, 0, 1);
  CHECK(is_congruence(n, c));
}

TEST_CASE("congruence lattices agree with the brute-force oracle") {
  std::vector<FiniteLattice> lattices{chain(1),
                                      chain(4),
                                      m3(),
                                      n5(),
                                      direct_product(chain(2), chain(2)),
                                      direct_product(chain(2), chain(3)),
                                      s7().lattice,
                                      glued_sum(m3(), n5())};
  for (auto const& L : lattices) {
    CHECK(labels_of(congruence_lattice(L)) == sorted(oracle::congruences(L)));
  }
}

TEST_CASE("Con S7") {
  auto con = congruence_lattice(s7().lattice);
  CHECK(con.size() == 5);
  CHECK(con.ji().size() == 3);
  CHECK(con.congruence(0).is_identity());
  CHECK(con.congruence(con.top_index()).is_all());
  CHECK(con.ji_poset().number_of_covers() == 2);
  // x-l and y-r share a color
  CHECK(con.edge_color({1, 3}) == con.edge_color({2, 5}));
  CHECK(con.edge_color({0, 1}) != con.edge_color({0, 2}));
  CHECK(con.atoms().size() == 1);
  CHECK(is_distributive(con.lattice()));
}

TEST_CASE("simple lattices") {
  CHECK(is_simple(m3()));
  CHECK_FALSE(is_simple(n5()));
  CHECK_FALSE(is_simple(chain(3)));
}

TEST_CASE("restriction and cp-extensions") {
  auto sq = direct_product(chain(3), chain(3));
  ElementSet cell{4, 5, 7, 8};
  CHECK(is_cp_extension(sq, ElementSet{0, 1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK_FALSE(is_cp_extension(sq, cell));
  auto alpha = principal_congruence(sq, 3, 6);
  auto r     = restrict(sq, alpha, cell);
  CHECK(r.size() == 4);
  CHECK(r.same_block(0, 2));
  CHECK_THROWS_AS(restrict(sq, alpha, ElementSet{0, 8}), Error);

  CHECK(is_cp_extension(m3(), ElementSet{0, 1}));
}

TEST_CASE("singleton extension") {
  auto       sq = direct_product(chain(2), chain(2));
  ElementSet I{0, 1};
  auto       e = singleton_extension(sq, I, Congruence::all(2));
  CHECK(e.blocks() == std::vector<ElementSet>{{0, 1}, {2}, {3}});
  CHECK_FALSE(is_congruence(sq, e));
  CHECK_THROWS_AS(singleton_extension(sq, ElementSet{1, 3}, Congruence::all(2)), Error);
}
