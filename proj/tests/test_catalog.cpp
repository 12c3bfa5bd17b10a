#include <doctest.h>

#include <set>

#include "latcon/catalog.hpp"
#include "latcon/construction.hpp"
#include "latcon/error.hpp"

using namespace latcon;

TEST_CASE("named lattices") {
  CHECK(named_lattice("s7").size() == 7);
  CHECK(named_lattice("m3").size() == 5);
  CHECK(named_lattice("s7+eye").size() == 8);
  CHECK(named_lattice("grid:3x4").size() == 12);
  CHECK(named_lattice("grid:3x4").bl() == 3);
  CHECK_THROWS_AS(named_lattice("grid:3"), Error);
  CHECK_THROWS_AS(named_lattice("nope"), Error);
}

TEST_CASE("default catalog names are distinct") {
  std::set<std::string> names;
  for (auto const& e : default_catalog()) {
    CHECK(names.insert(e.name).second);
  }
}

TEST_CASE("rectangular search") {
  auto a = rectangular_search(9);
  for (auto const& R : a.lattices) {
    CHECK(R.size() <= 9);
    CHECK_NOTHROW(make_rectangular(R.lattice));
  }
  for (std::size_t i = 0; i < a.lattices.size(); ++i) {
    for (std::size_t j = i + 1; j < a.lattices.size(); ++j) {
      CHECK_FALSE(is_isomorphic(a.lattices[i].lattice, a.lattices[j].lattice));
    }
  }
  auto found = [&](FiniteLattice const& L) {
    for (auto const& R : a.lattices) {
      if (is_isomorphic(R.lattice, L)) {
        return true;
      }
    }
    return false;
  };
  CHECK(found(grid(2, 2).lattice));
  CHECK(found(grid(3, 3).lattice));
  CHECK(found(m3_rect().lattice));
  CHECK(found(s7().lattice));
  CHECK(found(s7_eye().lattice));
}

TEST_CASE("search result does not depend on the seed") {
  auto a = rectangular_search(10, 0);
  auto b = rectangular_search(10, 12345);
  REQUIRE(a.lattices.size() == b.lattices.size());
  for (std::size_t i = 0; i < a.lattices.size(); ++i) {
    CHECK(is_isomorphic(a.lattices[i].lattice, b.lattices[i].lattice));
  }
}

TEST_CASE("s7 is the smallest lattice failing the collapse condition") {
  auto res = rectangular_search(12);
  std::size_t smallest = 0;
  for (auto const& R : res.lattices) {
    if (!upper_chain_collapse_check(R).holds && (smallest == 0 || R.size() < smallest)) {
      smallest = R.size();
      CHECK(is_isomorphic(R.lattice, s7().lattice));
    }
  }
  CHECK(smallest == 7);
}
