#include <doctest.h>

#include "latcon/construction.hpp"

using namespace latcon;

namespace {
  RectLattice s7_eye() {
    auto s = s7();
    return insert_eye(s, cells(s).front());
  }

  std::vector<std::pair<std::string, RectLattice>> small() {
    return {{"grid22", grid(2, 2)}, {"m3", m3_rect()}, {"s7", s7()}};
  }

  std::vector<BoundedHom> homs(RectLattice const& F, RectLattice const& G) {
    return bounded_homs(congruence_lattice(F.lattice).lattice(),
                        congruence_lattice(G.lattice).lattice());
  }

  bool all_colors_on(RectLattice const& R,
                     std::vector<Element> const& a,
                     std::vector<Element> const& b) {
    auto con = congruence_lattice(R.lattice);
    for (auto const* chain : {&a, &b}) {
      std::vector<int> seen(con.ji().size(), 0);
      for (auto const& e : chain_edges(*chain)) {
        seen[con.edge_color(e)] = 1;
      }
      for (int s : seen) {
        if (!s) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("boundary color extension") {
  for (auto const& F : {grid(2, 2), m3_rect(), s7(), s7_eye()}) {
    auto r = boundary_color_extension(F);
    auto const& R = r.output;
    CHECK(is_cp_extension(R.lattice, to_set(r.embedded_F)));
    CHECK(all_colors_on(R, R.upper_left, R.upper_right));
    CHECK(all_colors_on(R, R.lower_left, R.lower_right));
    CHECK(congruence_lattice(R.lattice).size() == congruence_lattice(F.lattice).size());
    CHECK(r.eye_log.size() == congruence_lattice(F.lattice).ji().size());
  }
  CHECK(boundary_color_extension(grid(2, 2)).output.size() == 20);
  CHECK(congruence_lattice(boundary_color_extension(m3_rect()).output.lattice).size() == 2);
}

TEST_CASE("filter representation over all homs") {
  for (auto const& [fname, F] : small()) {
    for (auto const& [gname, G] : small()) {
      for (auto const& phi : homs(F, G)) {
        CAPTURE(fname);
        CAPTURE(gname);
        CHECK_NOTHROW(filter_representation(F, G, phi));
      }
    }
  }
}

TEST_CASE("filter representation with the extra shapes") {
  auto F = grid(2, 3), G = s7_eye();
  for (auto const& phi : homs(F, G)) {
    CHECK_NOTHROW(filter_representation(F, G, phi));
  }
}

TEST_CASE("upper chain collapse check") {
  CHECK(upper_chain_collapse_check(m3_rect()).holds);
  CHECK(upper_chain_collapse_check(grid(2, 2)).holds);
  auto s = upper_chain_collapse_check(s7());
  CHECK_FALSE(s.holds);
  CHECK(s.agrees);
  REQUIRE(s.witnesses.size() == 1);
  CHECK(s.witnesses.front().blocks()
        == std::vector<ElementSet>{{0}, {1, 3}, {2, 5}, {4, 6}});
}

TEST_CASE("ideal representation") {
  for (auto const& F : {m3_rect(), grid(2, 2)}) {
    for (auto const& G : {m3_rect(), grid(2, 2), grid(2, 3)}) {
      for (auto const& phi : homs(F, G)) {
        CHECK_NOTHROW(ideal_representation(F, G, phi));
      }
    }
  }
  auto phi = homs(m3_rect(), s7()).front();
  try {
    ideal_representation(m3_rect(), s7(), phi);
    FAIL("expected ConditionIFails");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::condition_i_fails);
  }
}

TEST_CASE("simple ideal embedding") {
  for (auto const& G : {m3_rect(), grid(2, 2)}) {
    auto r = simple_ideal_embedding(G);
    CHECK(congruence_lattice(r.output.lattice).size() == 2);
    CHECK(is_ideal(r.output.lattice, to_set(r.embedded_G)));
  }
  CHECK_THROWS_AS(simple_ideal_embedding(s7()), Error);
}
