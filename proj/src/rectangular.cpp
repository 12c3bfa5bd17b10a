#include "latcon/rectangular.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "union_find.hpp"

namespace latcon {

  namespace {
    std::vector<Element> boundary_walk(FiniteLattice const& L, bool leftmost) {
      std::vector<Element> walk{L.bottom()};
      while (walk.back() != L.top()) {
        auto const& up = L.upper_covers(walk.back());
        walk.push_back(leftmost ? up.front() : up.back());
      }
      return walk;
    }

    Element find_corner(FiniteLattice const&        L,
                        std::vector<Element> const& boundary,
                        char const*                 side) {
      std::vector<Element> found;
      for (Element x : boundary) {
        if (x != L.bottom() && x != L.top() && is_doubly_irreducible(L, x)) {
          found.push_back(x);
        }
      }
      if (found.empty()) {
        throw Error(ErrorKind::no_corner,
                    std::string("no doubly irreducible element on the ") + side
                        + " boundary");
      }
      if (found.size() > 1) {
        throw Error(ErrorKind::ambiguous_corner,
                    std::string("several doubly irreducible elements on the ")
                        + side + " boundary");
      }
      return found.front();
    }

    // Split a boundary walk at the corner and check that the two halves are
    // exactly the down-set and the up-set of the corner.
    std::pair<std::vector<Element>, std::vector<Element>>
    split_boundary(FiniteLattice const&        L,
                   std::vector<Element> const& boundary,
                   Element                     corner) {
      auto it = std::find(boundary.begin(), boundary.end(), corner);
      std::vector<Element> lower(boundary.begin(), it + 1);
      std::vector<Element> upper(it, boundary.end());
      if (to_set(lower) != down_set(L, corner) || to_set(upper) != up_set(L, corner)) {
        throw Error(ErrorKind::boundary_not_chain,
                    "the down-set or up-set of corner " + std::to_string(corner)
                        + " is not a boundary chain");
      }
      return {std::move(lower), std::move(upper)};
    }

    void replace_in(std::vector<Element>& list, Element from, Element to) {
      *std::find(list.begin(), list.end(), from) = to;
    }

    void insert_after(std::vector<Element>& list, Element anchor, Element x) {
      list.insert(std::find(list.begin(), list.end(), anchor) + 1, x);
    }

    std::vector<Element> mapped(std::vector<Element> const& xs,
                                std::vector<Element> const& map) {
      std::vector<Element> result;
      result.reserve(xs.size());
      for (Element x : xs) {
        result.push_back(map[x]);
      }
      return result;
    }

    std::vector<Element> concat_chains(std::vector<Element> a,
                                       std::vector<Element> const& b) {
      a.insert(a.end(), b.begin() + 1, b.end());
      return a;
    }

    void check_facing(std::size_t a, std::size_t b, char const* what) {
      if (a != b) {
        throw Error(ErrorKind::boundary_mismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs "
                        + std::to_string(b) + " elements");
      }
    }

    void check_post(bool ok, char const* what) {
      if (!ok) {
        throw Error(ErrorKind::postcondition_failed, what);
      }
    }
  }  // namespace

  std::vector<Cover> chain_edges(std::vector<Element> const& chain) {
    std::vector<Cover> result;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      result.push_back({chain[i], chain[i + 1]});
    }
    return result;
  }

  RectLattice make_rectangular(FiniteLattice L) {
    if (!is_semimodular(L)) {
      throw Error(ErrorKind::not_semimodular, "the lattice is not semimodular");
    }
    auto left  = boundary_walk(L, true);
    auto right = boundary_walk(L, false);

    Element lc = find_corner(L, left, "left");
    Element rc = find_corner(L, right, "right");
    if (lc == rc || L.leq(lc, rc) || L.leq(rc, lc)) {
      throw Error(ErrorKind::no_corner, "no incomparable pair of corners");
    }
    if (L.meet(lc, rc) != L.bottom() || L.join(lc, rc) != L.top()) {
      throw Error(ErrorKind::corners_not_complementary,
                  "corners " + std::to_string(lc) + " and " + std::to_string(rc)
                      + " are not complementary");
    }

    RectLattice R;
    R.lc                                = lc;
    R.rc                                = rc;
    std::tie(R.lower_left, R.upper_left)   = split_boundary(L, left, lc);
    std::tie(R.lower_right, R.upper_right) = split_boundary(L, right, rc);

    std::vector<std::uint8_t> on_boundary(L.size(), 0);
    for (Element x : left) {
      on_boundary[x] = 1;
    }
    for (Element x : right) {
      on_boundary[x] = 1;
    }
    for (Element x = 0; x < L.size(); ++x) {
      if (!on_boundary[x] && is_doubly_irreducible(L, x)) {
        R.eyes.push_back(x);
      }
    }
    R.lattice = std::move(L);
    return R;
  }

  RectLattice grid(std::size_t m, std::size_t n) {
    if (m < 2 || n < 2) {
      throw Error(ErrorKind::size_too_small,
                  "grid(" + std::to_string(m) + ", " + std::to_string(n)
                      + ") needs both sides of at least 2 elements");
    }
    return make_rectangular(direct_product(chain(m), chain(n)));
  }

  RectLattice s7() {
    // 0, x, y, l, m, r, 1
    return make_rectangular(make_lattice(7,
                                         {{0, 1},
                                          {0, 2},
                                          {1, 3},
                                          {1, 4},
                                          {2, 4},
                                          {2, 5},
                                          {3, 6},
                                          {4, 6},
                                          {5, 6}}));
  }

  RectLattice m3_rect() {
    return make_rectangular(m3());
  }

  std::vector<Cell> cells(RectLattice const& R) {
    auto const&       L = R.lattice;
    std::vector<Cell> result;
    for (Element b = 0; b < L.size(); ++b) {
      auto const&          up = L.upper_covers(b);
      std::vector<Element> tops;
      for (std::size_t i = 0; i < up.size(); ++i) {
        for (std::size_t j = i + 1; j < up.size(); ++j) {
          Element t = L.join(up[i], up[j]);
          if (L.is_cover(up[i], t) && L.is_cover(up[j], t)
              && std::find(tops.begin(), tops.end(), t) == tops.end()) {
            tops.push_back(t);
          }
        }
      }
      std::vector<Cell> here;
      for (Element t : tops) {
        std::vector<Element> members;
        for (Element u : up) {
          if (L.leq(u, t)) {
            members.push_back(u);
          }
        }
        Cell c{b, t, members.front(), members.back(), {}};
        c.middles.assign(members.begin() + 1, members.end() - 1);
        here.push_back(std::move(c));
      }
      auto pos = [&](Element u) {
        return std::find(up.begin(), up.end(), u) - up.begin();
      };
      std::sort(here.begin(), here.end(), [&](Cell const& x, Cell const& y) {
        return pos(x.left) < pos(y.left);
      });
      result.insert(result.end(), here.begin(), here.end());
    }
    return result;
  }

  RectLattice insert_eye(RectLattice const& R, Cell const& cell) {
    std::optional<Cell> found;
    for (auto const& c : cells(R)) {
      if (c.bottom == cell.bottom && c.top == cell.top && c.left == cell.left
          && c.right == cell.right) {
        found = c;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::not_a_cell,
                  "[" + std::to_string(cell.bottom) + ", "
                      + std::to_string(cell.top) + "] is not a cell");
    }
    auto    upper = R.lattice.poset().upper_cover_lists();
    auto    lower = R.lattice.poset().lower_cover_lists();
    Element eye   = static_cast<Element>(R.size());
    Element after = found->middles.empty() ? found->left : found->middles.front();
    insert_after(upper[found->bottom], after, eye);
    insert_after(lower[found->top], after, eye);
    upper.push_back({found->top});
    lower.push_back({found->bottom});
    return make_rectangular(FiniteLattice(Poset(std::move(upper), std::move(lower))));
  }

  RectLattice add_fork(RectLattice const& R, Cell const& cell) {
    auto const& L     = R.lattice;
    auto        upper = L.poset().upper_cover_lists();
    auto        lower = L.poset().lower_cover_lists();
    auto        fresh = [&]() {
      upper.emplace_back();
      lower.emplace_back();
      return static_cast<Element>(upper.size() - 1);
    };
    // Put z on the edge u < w.
    auto subdivide = [&](Element u, Element w, Element z) {
      replace_in(upper[u], w, z);
      replace_in(lower[w], u, z);
      lower[z] = {u};
    };

    Element s = fresh();
    insert_after(lower[cell.top], cell.left, s);
    upper[s] = {cell.top};

    // Left leg: x_1 on bottom-left, then down-left through the cells whose
    // upper-right edge is the previous subdivided edge.
    Element x = fresh();
    subdivide(cell.bottom, cell.left, x);
    upper[x] = {cell.left, s};
    Element u = cell.bottom, v = cell.left, first_left = x;
    for (;;) {
      auto const& down = L.lower_covers(v);
      auto        it   = std::find(down.begin(), down.end(), u);
      if (it == down.begin()) {
        break;
      }
      Element w  = *(it - 1);
      Element u2 = L.meet(u, w);
      if (!L.is_cover(u2, u) || !L.is_cover(u2, w)) {
        break;
      }
      Element z = fresh();
      subdivide(u2, w, z);
      upper[z] = {w, x};
      lower[x] = {z, u};
      x        = z;
      u        = u2;
      v        = w;
    }

    Element y = fresh();
    subdivide(cell.bottom, cell.right, y);
    upper[y] = {s, cell.right};
    u        = cell.bottom;
    v        = cell.right;
    Element first_right = y;
    for (;;) {
      auto const& down = L.lower_covers(v);
      auto        it   = std::find(down.begin(), down.end(), u);
      if (it + 1 == down.end()) {
        break;
      }
      Element w  = *(it + 1);
      Element u2 = L.meet(u, w);
      if (!L.is_cover(u2, u) || !L.is_cover(u2, w)) {
        break;
      }
      Element z = fresh();
      subdivide(u2, w, z);
      upper[z] = {y, w};
      lower[y] = {u, z};
      y        = z;
      u        = u2;
      v        = w;
    }
    lower[s] = {first_left, first_right};
    return make_rectangular(FiniteLattice(Poset(std::move(upper), std::move(lower))));
  }

  RectLattice dual(RectLattice const& R) {
    return make_rectangular(dual(R.lattice));
  }

  Gluing glue(FiniteLattice const&        lower,
              std::vector<Element> const& filter,
              FiniteLattice const&        upper,
              std::vector<Element> const& ideal,
              GlueSide                    side) {
    for (Element x : filter) {
      lower.check(x);
    }
    for (Element x : ideal) {
      upper.check(x);
    }
    auto fset = to_set(filter);
    auto iset = to_set(ideal);
    if (fset.size() != filter.size() || !is_filter(lower, fset)) {
      throw Error(ErrorKind::not_a_filter, "gluing set is not a filter");
    }
    if (iset.size() != ideal.size() || !is_ideal(upper, iset)) {
      throw Error(ErrorKind::not_an_ideal, "gluing set is not an ideal");
    }
    if (filter.size() != ideal.size()) {
      throw Error(ErrorKind::not_isomorphic,
                  "filter has " + std::to_string(filter.size())
                      + " elements, ideal has " + std::to_string(ideal.size()));
    }
    for (std::size_t i = 0; i < filter.size(); ++i) {
      for (std::size_t j = 0; j < filter.size(); ++j) {
        if (lower.leq(filter[i], filter[j]) != upper.leq(ideal[i], ideal[j])) {
          throw Error(ErrorKind::not_isomorphic,
                      "the pairing is not an order-isomorphism");
        }
      }
    }

    std::vector<std::optional<Element>> shared(upper.size());
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      shared[ideal[i]] = filter[i];
    }
    Gluing g;
    g.lower_embedding.resize(lower.size());
    for (Element x = 0; x < lower.size(); ++x) {
      g.lower_embedding[x] = x;
    }
    g.upper_embedding.resize(upper.size());
    Element next = static_cast<Element>(lower.size());
    for (Element x = 0; x < upper.size(); ++x) {
      g.upper_embedding[x] = shared[x] ? *shared[x] : next++;
    }

    CoverLists up(next), down(next);
    auto       merge = [](std::vector<Element>& into, std::vector<Element> const& from) {
      for (Element x : from) {
        if (std::find(into.begin(), into.end(), x) == into.end()) {
          into.push_back(x);
        }
      }
    };
    auto add_lower = [&] {
      for (Element x = 0; x < lower.size(); ++x) {
        merge(up[x], lower.upper_covers(x));
        merge(down[x], lower.lower_covers(x));
      }
    };
    auto add_upper = [&] {
      for (Element x = 0; x < upper.size(); ++x) {
        Element gx = g.upper_embedding[x];
        merge(up[gx], mapped(upper.upper_covers(x), g.upper_embedding));
        merge(down[gx], mapped(upper.lower_covers(x), g.upper_embedding));
      }
    };
    if (side == GlueSide::filter_right) {
      add_lower();
      add_upper();
    } else {
      add_upper();
      add_lower();
    }
    g.lattice    = FiniteLattice(Poset(std::move(up), std::move(down)));
    g.lower_part = to_set(g.lower_embedding);
    g.upper_part = to_set(g.upper_embedding);
    return g;
  }

  Congruence glue_congruence_pair(Gluing const&     g,
                                  Congruence const& alpha_lower,
                                  Congruence const& alpha_upper) {
    std::size_t const n = g.lattice.size();
    if (alpha_lower.size() != g.lower_embedding.size()
        || alpha_upper.size() != g.upper_embedding.size()) {
      throw Error(ErrorKind::not_a_partition,
                  "congruence sizes do not match the glued pieces");
    }
    std::vector<std::optional<Element>> from_lower(n), from_upper(n);
    for (Element x = 0; x < g.lower_embedding.size(); ++x) {
      from_lower[g.lower_embedding[x]] = x;
    }
    for (Element x = 0; x < g.upper_embedding.size(); ++x) {
      from_upper[g.upper_embedding[x]] = x;
    }
    auto rel_lower = [&](Element x, Element y) {
      return from_lower[x] && from_lower[y]
             && alpha_lower.same_block(*from_lower[x], *from_lower[y]);
    };
    auto rel_upper = [&](Element x, Element y) {
      return from_upper[x] && from_upper[y]
             && alpha_upper.same_block(*from_upper[x], *from_upper[y]);
    };

    std::vector<Element> overlap;
    for (Element x = 0; x < n; ++x) {
      if (from_lower[x] && from_upper[x]) {
        overlap.push_back(x);
      }
    }
    for (Element x : overlap) {
      for (Element y : overlap) {
        if (rel_lower(x, y) != rel_upper(x, y)) {
          throw Error(ErrorKind::incompatible,
                      "the congruences disagree on the overlap at ("
                          + std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      }
    }

    std::vector<std::uint8_t> rel(n * n, 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        rel[x * n + y] = rel_lower(x, y) || rel_upper(x, y);
      }
    }
    // The two composites; the relations are symmetric, so the second is the
    // converse of the first.
    for (Element x = 0; x < n; ++x) {
      for (Element z = 0; z < n; ++z) {
        if (!rel_lower(x, z)) {
          continue;
        }
        for (Element y = 0; y < n; ++y) {
          if (rel_upper(z, y)) {
            rel[x * n + y] = 1;
            rel[y * n + x] = 1;
          }
        }
      }
    }
    detail::UnionFind uf(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (rel[x * n + y]) {
          uf.unite(x, y);
        }
      }
    }
    Congruence alpha(uf.labels());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        check_post(!alpha.same_block(x, y) || rel[x * n + y],
                   "the assembled relation is not transitive");
      }
    }
    check_post(is_congruence(g.lattice, alpha),
               "the assembled relation is not a congruence");
    return alpha;
  }

  TripleGluing triple_glue(RectLattice const& top,
                           RectLattice const& left_flap,
                           RectLattice const& right_flap,
                           RectLattice const& bottom) {
    check_facing(left_flap.tr(), top.bl(), "left flap / top");
    check_facing(left_flap.br(), bottom.tl(), "left flap / bottom");
    check_facing(right_flap.tl(), top.br(), "right flap / top");
    check_facing(right_flap.bl(), bottom.tr(), "right flap / bottom");

    TripleGluing t;
    t.top        = top;
    t.bottom     = bottom;
    t.left_flap  = left_flap;
    t.right_flap = right_flap;

    t.lower_half = glue(bottom.lattice,
                        bottom.upper_left,
                        left_flap.lattice,
                        left_flap.lower_right,
                        GlueSide::filter_left);
    t.upper_half = glue(right_flap.lattice,
                        right_flap.upper_left,
                        top.lattice,
                        top.lower_right,
                        GlueSide::filter_left);

    auto lower_tr
        = concat_chains(mapped(bottom.upper_right, t.lower_half.lower_embedding),
                        mapped(left_flap.upper_right, t.lower_half.upper_embedding));
    auto upper_bl
        = concat_chains(mapped(right_flap.lower_left, t.upper_half.lower_embedding),
                        mapped(top.lower_left, t.upper_half.upper_embedding));
    t.whole = glue(t.lower_half.lattice,
                   lower_tr,
                   t.upper_half.lattice,
                   upper_bl,
                   GlueSide::filter_right);

    auto const& wl = t.whole.lower_embedding;
    auto const& wu = t.whole.upper_embedding;
    t.bottom_embedding = mapped(t.lower_half.lower_embedding, wl);
    t.left_embedding   = mapped(t.lower_half.upper_embedding, wl);
    t.right_embedding  = mapped(t.upper_half.lower_embedding, wu);
    t.top_embedding    = mapped(t.upper_half.upper_embedding, wu);
    t.c                = t.bottom_embedding[bottom.lattice.top()];

    t.result = make_rectangular(t.whole.lattice);
    auto const& R = t.result;
    check_post(R.lc == t.left_embedding[left_flap.lc], "lc is not the left flap corner");
    check_post(R.rc == t.right_embedding[right_flap.rc],
               "rc is not the right flap corner");
    check_post(R.lattice.bottom() == t.bottom_embedding[bottom.lattice.bottom()],
               "0 is not the bottom piece's 0");
    check_post(R.lattice.top() == t.top_embedding[top.lattice.top()],
               "1 is not the top piece's 1");
    check_post(t.c == t.top_embedding[top.lattice.bottom()]
                   && t.c == t.left_embedding[left_flap.rc]
                   && t.c == t.right_embedding[right_flap.lc],
               "the four pieces do not meet in one element");
    check_post(R.size() + top.bl() + top.br() + bottom.tl() + bottom.tr()
                   == top.size() + bottom.size() + left_flap.size()
                          + right_flap.size() + 1,
               "element count");
    return t;
  }

  Congruence triple_glue_congruence(TripleGluing const& t,
                                    Congruence const&   alpha_top,
                                    Congruence const&   alpha_left,
                                    Congruence const&   alpha_right,
                                    Congruence const&   alpha_bottom) {
    auto facing = [](Congruence const&           a,
                     std::vector<Element> const& ca,
                     Congruence const&           b,
                     std::vector<Element> const& cb,
                     char const*                 name) {
      for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = i + 1; j < ca.size(); ++j) {
          if (a.same_block(ca[i], ca[j]) != b.same_block(cb[i], cb[j])) {
            throw Error(ErrorKind::incompatible,
                        std::string(name) + " boundary: the congruences disagree");
          }
        }
      }
    };
    // Appendix labels: X bottom, Y top, U left flap, V right flap.
    facing(alpha_bottom,
           t.bottom.upper_left,
           alpha_left,
           t.left_flap.lower_right,
           "bottom/left (E:UX)");
    facing(alpha_bottom,
           t.bottom.upper_right,
           alpha_right,
           t.right_flap.lower_left,
           "bottom/right (E:VX)");
    facing(alpha_top,
           t.top.lower_right,
           alpha_right,
           t.right_flap.upper_left,
           "top/right (E:VY)");
    facing(alpha_top,
           t.top.lower_left,
           alpha_left,
           t.left_flap.upper_right,
           "top/left (E:UY)");

    auto lower = glue_congruence_pair(t.lower_half, alpha_bottom, alpha_left);
    auto upper = glue_congruence_pair(t.upper_half, alpha_right, alpha_top);
    return glue_congruence_pair(t.whole, lower, upper);
  }

  std::pair<std::size_t, std::size_t> coordinates(RectLattice const& R, Element x) {
    auto const& L  = R.lattice;
    auto        ll = std::find(R.lower_left.begin(),
                        R.lower_left.end(),
                        L.meet(x, R.lc));
    auto        lr = std::find(R.lower_right.begin(),
                        R.lower_right.end(),
                        L.meet(x, R.rc));
    return {static_cast<std::size_t>(ll - R.lower_left.begin()),
            static_cast<std::size_t>(lr - R.lower_right.begin())};
  }

  Cell crossing_cell(RectLattice const& flap, std::size_t row, std::size_t column) {
    std::size_t const m = flap.bl(), n = flap.br();
    bool              plain = flap.eyes.empty() && flap.size() == m * n;
    std::vector<std::optional<Element>> at(m * n);
    if (plain) {
      for (Element x = 0; x < flap.size() && plain; ++x) {
        auto [i, k] = coordinates(flap, x);
        auto& slot  = at[i * n + k];
        plain       = !slot;
        slot        = x;
      }
    }
    if (plain) {
      for (auto const& [a, b] : flap.lattice.covers()) {
        auto [i, k] = coordinates(flap, a);
        auto [j, l] = coordinates(flap, b);
        plain       = plain && j + l == i + k + 1 && j >= i && l >= k;
      }
    }
    if (!plain) {
      throw Error(ErrorKind::flap_not_plain_grid, "the flap is not an eye-free grid");
    }
    if (row + 1 >= m || column + 1 >= n) {
      throw Error(ErrorKind::index_out_of_range,
                  "no cell (" + std::to_string(row) + ", " + std::to_string(column)
                      + ") in a " + std::to_string(m) + " x " + std::to_string(n)
                      + " grid");
    }
    auto id = [&](std::size_t i, std::size_t k) {
      return *at[i * n + k];
    };
    return Cell{id(row, column),
                id(row + 1, column + 1),
                id(row + 1, column),
                id(row, column + 1),
                {}};
  }

}  // namespace latcon
