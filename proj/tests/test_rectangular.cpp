#include <doctest.h>

#include <algorithm>
#include <set>

#include "latcon/rectangular.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {
  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::parse_error;
  }
}  // namespace

TEST_CASE("grid boundaries") {
  auto g = grid(2, 2);
  CHECK(g.lc == 2);
  CHECK(g.rc == 1);
  CHECK(g.bl() == 2);
  CHECK(g.br() == 2);
  CHECK(g.tl() == 2);
  CHECK(g.tr() == 2);
  CHECK(g.eyes.empty());

  auto h = grid(3, 4);
  CHECK(h.bl() == 3);
  CHECK(h.tr() == 3);
  CHECK(h.br() == 4);
  CHECK(h.tl() == 4);
  CHECK(cells(h).size() == 6);
  CHECK(cells(grid(3, 3)).size() == 4);

  CHECK(kind_of([] { grid(1, 3); }) == ErrorKind::size_too_small);
}

TEST_CASE("validator") {
  auto m = m3_rect();
  CHECK(m.eyes == ElementSet{2});
  CHECK(m.lc == 1);
  CHECK(m.rc == 3);
  CHECK(kind_of([] { make_rectangular(chain(3)); }) == ErrorKind::no_corner);
  CHECK(kind_of([] { make_rectangular(n5()); }) == ErrorKind::not_semimodular);
  CHECK(kind_of([] { make_rectangular(glued_sum(m3(), m3())); })
        == ErrorKind::ambiguous_corner);
}

TEST_CASE("S7") {
  auto s = s7();
  CHECK(s.size() == 7);
  CHECK(s.lattice.covers().size() == 9);
  CHECK(s.lc == 3);
  CHECK(s.rc == 5);
  CHECK(s.bl() == 3);
  CHECK(s.br() == 3);
  CHECK(s.tl() == 2);
  CHECK(s.tr() == 2);
  CHECK(cells(s).size() == 3);

  auto f = add_fork(grid(2, 2), cells(grid(2, 2)).front());
  CHECK(is_isomorphic(f.lattice, s.lattice));
  CHECK(congruence_lattice(s.lattice).ji().size() == 3);
}

TEST_CASE("forks in larger grids") {
  auto g = grid(3, 3);
  for (auto const& c : cells(g)) {
    auto f = add_fork(g, c);
    CHECK(f.eyes.empty());
    CHECK(f.size() > g.size());
  }
}

TEST_CASE("eyes") {
  auto g = grid(2, 2);
  auto m = insert_eye(g, cells(g).front());
  CHECK(is_isomorphic(m.lattice, m3()));
  CHECK(m.eyes == ElementSet{4});

  auto m4 = insert_eye(m, cells(m).front());
  CHECK(m4.size() == 6);
  CHECK(m4.eyes.size() == 2);
  CHECK(m4.lattice.upper_covers(0) == std::vector<Element>{2, 4, 5, 1});
  CHECK(kind_of([&] { insert_eye(g, Cell{0, 2, 1, 2, {}}); }) == ErrorKind::not_a_cell);

  // an eye merges the two side colors of its cell
  auto e = insert_eye(grid(3, 3), crossing_cell(grid(3, 3), 0, 0));
  CHECK(congruence_lattice(e.lattice).ji().size() == 3);
}

TEST_CASE("dual") {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 4}}) {
    auto d = dual(grid(m, n));
    CHECK(is_isomorphic(d.lattice, grid(m, n).lattice));
    CHECK(dual(d.lattice) == grid(m, n).lattice);
  }
  CHECK(kind_of([] { dual(s7()); }) == ErrorKind::not_semimodular);
}

TEST_CASE("gluing") {
  auto a = grid(2, 2), b = grid(2, 2);
  auto g = glue(a.lattice, a.upper_left, b.lattice, b.lower_right, GlueSide::filter_left);
  CHECK(g.lattice.size() == 6);
  CHECK(is_isomorphic(g.lattice, grid(2, 3).lattice));
  CHECK(is_ideal(g.lattice, g.lower_part));
  CHECK(is_filter(g.lattice, g.upper_part));
  CHECK_NOTHROW(make_rectangular(g.lattice));

  auto s = glue(chain(2), {1}, m3(), {0});
  CHECK(s.lattice == glued_sum(chain(2), m3()));

  auto c = grid(3, 2);
  CHECK(kind_of([&] {
          glue(a.lattice, a.upper_left, c.lattice, c.lower_left);
        })
        == ErrorKind::not_isomorphic);
  CHECK(kind_of([&] { glue(a.lattice, a.lower_left, b.lattice, b.lower_right); })
        == ErrorKind::not_a_filter);
}

TEST_CASE("gluing congruences") {
  auto m = m3();
  auto g = glue(m, {4}, m, {0});
  auto d = Congruence::identity(5);
  CHECK(glue_congruence_pair(g, d, d).is_identity());

  auto a = grid(2, 2), b = grid(2, 2);
  auto h = glue(a.lattice, a.upper_left, b.lattice, b.lower_right, GlueSide::filter_left);
  CHECK(kind_of([&] { glue_congruence_pair(h, Congruence::all(4), Congruence::identity(4)); })
        == ErrorKind::incompatible);

  // compatible pairs on a glued sum of two M3 biject with Con
  std::size_t count = 0;
  std::set<std::vector<Element>> seen;
  for (auto const& x : oracle::congruences(m)) {
    for (auto const& y : oracle::congruences(m)) {
      try {
        auto alpha = glue_congruence_pair(g, Congruence(x), Congruence(y));
        seen.insert(alpha.labels());
        ++count;
      } catch (Error const&) {
      }
    }
  }
  CHECK(count == 4);
  CHECK(seen.size() == 4);
  CHECK(oracle::congruences(g.lattice).size() == 4);
}

TEST_CASE("triple gluing of four squares") {
  auto sq = grid(2, 2);
  auto t  = triple_glue(sq, sq, sq, sq);
  CHECK(t.result.size() == 9);
  CHECK(is_isomorphic(t.result.lattice, grid(3, 3).lattice));
  CHECK(t.result.lattice.bottom() == t.bottom_embedding[0]);
  CHECK(t.result.lattice.top() == t.top_embedding[3]);
  CHECK(to_set(t.top_embedding) == up_set(t.result.lattice, t.c));
  CHECK(to_set(t.bottom_embedding) == down_set(t.result.lattice, t.c));

  // compatible quadruples biject with Con of the result
  auto cs = oracle::congruences(sq.lattice);
  std::set<std::vector<Element>> seen;
  std::size_t compatible = 0;
  for (auto const& a : cs) {
    for (auto const& b : cs) {
      for (auto const& c : cs) {
        for (auto const& d : cs) {
          try {
            auto alpha = triple_glue_congruence(
                t, Congruence(a), Congruence(b), Congruence(c), Congruence(d));
            seen.insert(alpha.labels());
            ++compatible;
          } catch (Error const& e) {
            CHECK(e.kind() == ErrorKind::incompatible);
          }
        }
      }
    }
  }
  CHECK(compatible == 16);
  CHECK(seen.size() == 16);
  CHECK(oracle::congruences(t.result.lattice).size() == 16);
}

TEST_CASE("triple gluing failures name the boundary") {
  auto sq = grid(2, 2);
  auto t  = triple_glue(sq, sq, sq, sq);
  auto d  = Congruence::identity(4);
  // bottom collapses its upper-left edge, left flap does not collapse the
  // facing edge; every other pair agrees.
  auto row = principal_congruence(sq.lattice, 2, 3);
  try {
    triple_glue_congruence(t, d, d, d, row);
    FAIL("expected Incompatible");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::incompatible);
    CHECK(std::string(e.what()).find("bottom/left") != std::string::npos);
  }
  CHECK(kind_of([&] { triple_glue(sq, grid(3, 2), sq, sq); })
        == ErrorKind::boundary_mismatch);
}

TEST_CASE("triple gluing with S7 on top") {
  auto s = s7();
  auto t = triple_glue(s, grid(s.bl(), 2), grid(2, s.br()), grid(2, 2));
  CHECK(t.result.size() == 7 + 6 + 6 + 4 - 3 - 3 - 2 - 2 + 1);
}

TEST_CASE("crossing cells") {
  auto g = grid(3, 4);
  auto c = crossing_cell(g, 1, 2);
  CHECK(coordinates(g, c.bottom) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(coordinates(g, c.top) == std::pair<std::size_t, std::size_t>{2, 3});
  auto con = congruence_lattice(g.lattice);
  CHECK(con.edge_color({c.bottom, c.left}) == con.edge_color({g.lower_left[1], g.lower_left[2]}));
  CHECK(con.edge_color({c.bottom, c.right})
        == con.edge_color({g.lower_right[2], g.lower_right[3]}));
  CHECK(crossing_cell(grid(2, 2), 0, 0).top == 3);
  CHECK(kind_of([] { crossing_cell(grid(2, 3), 1, 0); }) == ErrorKind::index_out_of_range);
  CHECK(kind_of([] { crossing_cell(m3_rect(), 0, 0); }) == ErrorKind::flap_not_plain_grid);
  CHECK(kind_of([] { crossing_cell(s7(), 0, 0); }) == ErrorKind::flap_not_plain_grid);
}
