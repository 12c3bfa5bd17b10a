#include <doctest.h>

#include "latcon/catalog.hpp"
#include "latcon/error.hpp"
#include "latcon/io.hpp"

using namespace latcon;

namespace {
  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::parse_error;
  }
}  // namespace

TEST_CASE("lattice round trip") {
  for (auto const& e : default_catalog()) {
    INFO(e.name);
    auto back = lattice_from_json(json::parse(dump(to_json(e.lattice))));
    CHECK(back == e.lattice);
  }
}

TEST_CASE("rectangular round trip keeps corners and eyes") {
  auto R = s7_eye();
  auto back = rect_from_json(to_json(R));
  CHECK(back.lattice == R.lattice);
  CHECK(back.lc == R.lc);
  CHECK(back.rc == R.rc);
  CHECK(back.eyes == R.eyes);
}

TEST_CASE("planar order defaults to the order of the covers") {
  auto j = json::parse(R"({"size": 4, "covers": [[0,1],[0,2],[1,3],[2,3]]})");
  auto L = lattice_from_json(j);
  CHECK(L.upper_covers(0) == std::vector<Element>{1, 2});
  auto R = rect_from_json(j);
  CHECK(R.lc == 1);
  CHECK(R.rc == 2);
}

TEST_CASE("congruence and hom round trip") {
  auto L = s7().lattice;
  auto con = congruence_lattice(L);
  for (auto const& c : con.congruences()) {
    CHECK(congruence_from_json(to_json(L, c), L.size()) == c);
  }
  auto D = con.lattice();
  for (auto const& h : bounded_homs(D, D)) {
    CHECK(hom_from_json(to_json(h), D, D) == h);
  }
  auto j = json::parse(R"({"map": [0, 4, 4, 4, 4]})");
  CHECK(hom_from_json(j, D, D).map()[1] == 4);
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { lattice_from_json(json::parse("[]")); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { lattice_from_json(json::parse(R"({"size": 3})")); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { lattice_from_json(json::parse(R"({"size": "3", "covers": []})")); })
        == ErrorKind::parse_error);
  // Parses, but is not a lattice.
  CHECK(kind_of([] {
          lattice_from_json(json::parse(R"({"size": 4, "covers": [[0,2],[0,3],[1,2],[1,3]]})"));
        })
        != ErrorKind::parse_error);
  CHECK(kind_of([] {
          lattice_from_json(json::parse(
              R"({"size": 3, "covers": [[0,1],[1,2]], "upper_order": [[2],[1],[]]})"));
        })
        == ErrorKind::parse_error);
  CHECK(kind_of([] { read_json_file("/nonexistent/x.json"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { congruence_from_json(json::parse(R"({"blocks": [[0],[1]]})"), 3); })
        != ErrorKind::postcondition_failed);
}

TEST_CASE("con JSON lists every edge color") {
  auto L = s7().lattice;
  auto j = con_to_json(L, congruence_lattice(L));
  CHECK(j["congruences"].size() == 5);
  CHECK(j["ji"].size() == 3);
  CHECK(j["edge_colors"].size() == L.covers().size());
}
