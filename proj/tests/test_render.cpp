#include <doctest.h>

#include <algorithm>

#include "latcon/catalog.hpp"
#include "latcon/render.hpp"

using namespace latcon;

namespace {
  std::size_t count(std::string const& s, std::string const& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) {
      ++n;
    }
    return n;
  }
}  // namespace

TEST_CASE("s7 diagram") {
  auto R = s7();
  auto lay = layout(R);
  CHECK(lay.edges.size() == 9);
  CHECK(std::count(lay.steep.begin(), lay.steep.end(), true) == 1);
  for (std::size_t i = 0; i < lay.edges.size(); ++i) {
    if (lay.steep[i]) {
      CHECK(lay.edges[i].lower == 4);  // the middle element
      CHECK(lay.edges[i].upper == 6);
    }
  }
  auto svg = render_svg(R.lattice, lay);
  CHECK(count(svg, "<circle") == 7);
  CHECK(count(svg, "<line") == 9);
  CHECK(count(svg, "class=\"steep\"") == 1);
  CHECK(svg == render_svg(R.lattice, layout(s7())));
}

TEST_CASE("grids have no steep edges") {
  auto R = grid(3, 4);
  auto lay = layout(R);
  CHECK(std::none_of(lay.steep.begin(), lay.steep.end(), [](bool b) { return b; }));
  CHECK(lay.position[R.lattice.top()].y == 5.0);
}

TEST_CASE("eyes sit between the sides of their cell") {
  auto R = s7_eye();
  auto lay = layout(R);
  for (Element e : R.eyes) {
    auto lower = R.lattice.lower_covers(e);
    REQUIRE(lower.size() == 1);
    CHECK(lay.position[e].y == lay.position[lower[0]].y + 1.0);
  }
}

TEST_CASE("layered layout and dot output") {
  auto L = n5();
  auto lay = layout(L);
  CHECK(lay.position.size() == 5);
  auto dot = render_dot(L, lay);
  CHECK(dot.rfind("graph lattice {", 0) == 0);
  CHECK(count(dot, " -- ") == L.covers().size());
}
