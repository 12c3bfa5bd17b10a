#include <doctest.h>

#include "latcon/construction.hpp"
#include "latcon/error.hpp"
#include "latcon/verify.hpp"

using namespace latcon;

namespace {
  BoundedHom first_hom(RectLattice const& F, RectLattice const& G) {
    return bounded_homs(congruence_lattice(F.lattice).lattice(),
                        congruence_lattice(G.lattice).lattice())
        .front();
  }

  bool has_failure(VerificationReport const& r, std::string const& name) {
    for (auto const& c : r.checks) {
      if (c.name == name) {
        return !c.passed && !c.witness.empty();
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("filter representation verifies") {
  auto F = s7(), G = grid(2, 2);
  auto phi = first_hom(F, G);
  auto rep = filter_representation(F, G, phi);
  auto v = verify_filter_representation(rep.output.lattice, F.lattice, rep.embedded_F,
                                        G.lattice, rep.embedded_G, phi);
  CHECK(v.summary());
  CHECK(to_text(v).find("summary: pass") != std::string::npos);
}

TEST_CASE("a wrong hom is caught") {
  auto F = s7();
  auto D = congruence_lattice(F.lattice).lattice();
  auto homs = bounded_homs(D, D);
  REQUIRE(homs.size() > 1);
  auto rep = filter_representation(F, F, homs[0]);
  auto v = verify_filter_representation(rep.output.lattice, F.lattice, rep.embedded_F,
                                        F.lattice, rep.embedded_G, homs[1]);
  CHECK_FALSE(v.summary());
  CHECK(has_failure(v, "phi(a|F) = a|G for all a in Con L"));
}

TEST_CASE("a filter is not reported as an ideal") {
  auto F = grid(2, 2), G = grid(2, 2);
  auto phi = first_hom(F, G);
  auto rep = filter_representation(F, G, phi);
  auto v = verify_ideal_representation(rep.output.lattice, F.lattice, rep.embedded_F,
                                       G.lattice, rep.embedded_G, phi);
  CHECK_FALSE(v.summary());
  CHECK(has_failure(v, "G is an ideal of L"));
}

TEST_CASE("perturbed embeddings are rejected") {
  auto F = s7(), G = s7();
  auto phi = first_hom(F, G);
  auto rep = filter_representation(F, G, phi);
  auto broken = rep.embedded_F;
  std::swap(broken[1], broken[2]);
  std::swap(broken[0], broken[6]);
  CHECK_THROWS_AS(verify_filter_representation(rep.output.lattice, F.lattice, broken,
                                               G.lattice, rep.embedded_G, phi),
                  Error);
  auto short_map = rep.embedded_G;
  short_map.pop_back();
  CHECK_THROWS_AS(verify_filter_representation(rep.output.lattice, F.lattice, rep.embedded_F,
                                               G.lattice, short_map, phi),
                  Error);
}

TEST_CASE("one-element lattices") {
  auto one = chain(1);
  auto con = congruence_lattice(one).lattice();
  auto phi = make_bounded_hom(con, con, {0});
  auto v = verify_filter_representation(one, one, {0}, one, {0}, phi);
  CHECK(v.summary());
}

TEST_CASE("lemma suite") {
  SUBCASE("empty catalog passes vacuously") {
    auto r = lemma_suite({});
    CHECK(r.summary());
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].name == "catalog");
  }
  SUBCASE("non-rectangular entries are skipped") {
    auto r = lemma_suite({{"n5", n5()}});
    CHECK(r.summary());
  }
  SUBCASE("default catalog") {
    auto r = lemma_suite(default_catalog());
    for (auto const& c : r.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("verification matrix") {
  std::vector<RectLattice> shapes = {grid(2, 2), grid(2, 3), m3_rect(), s7(),
                                     insert_eye(s7(), cells(s7()).front())};
  std::size_t ideal_runs = 0;
  for (auto const& F : shapes) {
    for (auto const& G : shapes) {
      bool const condition = upper_chain_collapse_check(G).holds;
      for (auto const& phi : bounded_homs(congruence_lattice(F.lattice).lattice(),
                                          congruence_lattice(G.lattice).lattice())) {
        auto r = filter_representation(F, G, phi);
        CHECK(verify_filter_representation(r.output.lattice, F.lattice, r.embedded_F,
                                           G.lattice, r.embedded_G, phi)
                  .summary());
        if (condition) {
          ++ideal_runs;
          auto q = ideal_representation(F, G, phi);
          CHECK(verify_ideal_representation(q.output.lattice, F.lattice, q.embedded_F,
                                            G.lattice, q.embedded_G, phi)
                    .summary());
        }
      }
    }
  }
  CHECK(ideal_runs == 109);
}

TEST_CASE("extension of the four-element grid") {
  auto r = boundary_color_extension(grid(2, 2));
  CHECK(r.output.size() == 20);
  CHECK(congruence_lattice(r.output.lattice).size() == 4);
}
