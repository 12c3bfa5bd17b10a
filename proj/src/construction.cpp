#include "latcon/construction.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace latcon {

  namespace {
    struct BoundaryEdge {
      bool        left;   // lower-left (or upper-left) chain
      std::size_t index;  // position of the edge in its chain
    };

    // First edge of the given color, lower-left chain bottom-up first.
    std::optional<BoundaryEdge> first_lower_edge(RectLattice const& R,
                                                 ConLattice const&  con,
                                                 std::size_t        color) {
      auto ll = chain_edges(R.lower_left);
      for (std::size_t i = 0; i < ll.size(); ++i) {
        if (con.edge_color(ll[i]) == color) {
          return BoundaryEdge{true, i};
        }
      }
      auto lr = chain_edges(R.lower_right);
      for (std::size_t i = 0; i < lr.size(); ++i) {
        if (con.edge_color(lr[i]) == color) {
          return BoundaryEdge{false, i};
        }
      }
      return std::nullopt;
    }

    std::vector<Element> compose(std::vector<Element> const& first,
                                 std::vector<Element> const& second) {
      std::vector<Element> result;
      result.reserve(first.size());
      for (Element x : first) {
        result.push_back(second[x]);
      }
      return result;
    }

    Cell map_cell(Cell const& c, std::vector<Element> const& m) {
      Cell r{m[c.bottom], m[c.top], m[c.left], m[c.right], {}};
      for (Element x : c.middles) {
        r.middles.push_back(m[x]);
      }
      return r;
    }

    void check_post(bool ok, std::string const& what) {
      if (!ok) {
        throw Error(ErrorKind::postcondition_failed, what);
      }
    }

    bool colors_on_chains(ConLattice const&           con,
                          std::vector<Element> const& a,
                          std::vector<Element> const& b) {
      for (auto const* chain : {&a, &b}) {
        std::vector<std::uint8_t> seen(con.ji().size(), 0);
        for (auto const& e : chain_edges(*chain)) {
          seen[con.edge_color(e)] = 1;
        }
        if (std::count(seen.begin(), seen.end(), 1)
            != static_cast<std::ptrdiff_t>(seen.size())) {
          return false;
        }
      }
      return true;
    }

    // For each edge of `chain` in R, the index in Con F of the restriction
    // of its color to F.
    std::vector<std::size_t> restricted_colors(ConLattice const&           conR,
                                               std::vector<Element> const& chain,
                                               std::vector<Element> const& f_in_r,
                                               ConLattice const&           conF) {
      std::vector<std::size_t> result;
      for (auto const& e : chain_edges(chain)) {
        auto const& alpha = conR.congruence(conR.edge_congruence(e));
        auto        idx   = conF.index_of(restrict_along(alpha, f_in_r));
        check_post(idx.has_value(), "restriction is not a congruence of F");
        result.push_back(*idx);
      }
      return result;
    }

    std::size_t find_index(std::vector<std::size_t> const& v,
                           std::size_t                     x,
                           char const*                     what) {
      auto it = std::find(v.begin(), v.end(), x);
      check_post(it != v.end(), what);
      return static_cast<std::size_t>(it - v.begin());
    }

    void check_hom(BoundedHom const& phi, ConLattice const& conF, ConLattice const& conG) {
      if (!(phi.source() == conF.lattice()) || !(phi.target() == conG.lattice())) {
        throw Error(ErrorKind::not_homomorphic,
                    "the hom does not run from Con F to Con G");
      }
    }

    // Restriction Con L -> Con F bijective, and phi(a|F) = a|G throughout.
    void check_diagram(FiniteLattice const&        L,
                       std::vector<Element> const& f_in_l,
                       std::vector<Element> const& g_in_l,
                       ConLattice const&           conF,
                       ConLattice const&           conG,
                       BoundedHom const&           phi) {
      auto                     conL = congruence_lattice(L);
      std::vector<std::size_t> hit(conF.size(), 0);
      for (auto const& alpha : conL.congruences()) {
        auto f = conF.index_of(restrict_along(alpha, f_in_l));
        auto g = conG.index_of(restrict_along(alpha, g_in_l));
        check_post(f && g, "a restriction is not a congruence");
        ++hit[*f];
        check_post(phi(static_cast<Element>(*f)) == *g,
                   "phi(a|F) differs from a|G");
      }
      check_post(conL.size() == conF.size()
                     && std::all_of(hit.begin(), hit.end(), [](auto h) { return h == 1; }),
                 "restriction Con L -> Con F is not a bijection");
    }
  }  // namespace

  std::vector<ColorRow> color_table(RectLattice const& R) {
    auto                  con = congruence_lattice(R.lattice);
    std::vector<ColorRow> rows(con.ji().size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      rows[k].congruence = con.ji()[k];
    }
    auto fill = [&](std::vector<Element> const& chain, auto member) {
      for (auto const& e : chain_edges(chain)) {
        (rows[con.edge_color(e)].*member).push_back(e);
      }
    };
    fill(R.lower_left, &ColorRow::lower_left);
    fill(R.lower_right, &ColorRow::lower_right);
    fill(R.upper_left, &ColorRow::upper_left);
    fill(R.upper_right, &ColorRow::upper_right);
    return rows;
  }

  ConstructionReport boundary_color_extension(RectLattice const& F) {
    auto              conF = congruence_lattice(F.lattice);
    std::size_t const j    = conF.ji().size();

    std::vector<BoundaryEdge> first(j);
    for (std::size_t x = 0; x < j; ++x) {
      auto e = first_lower_edge(F, conF, x);
      if (!e) {
        throw Error(ErrorKind::color_missing_on_lower_boundary,
                    "join-irreducible congruence " + format_blocks(conF.congruence(conF.ji()[x]))
                        + " colors no lower-boundary edge");
      }
      first[x] = *e;
    }

    auto left  = grid(F.bl(), j + 1);
    auto right = grid(j + 1, F.br());
    auto plain = grid(j + 1, j + 1);
    auto base  = plain;
    for (std::size_t k = 0; k < j; ++k) {
      base = insert_eye(base, crossing_cell(plain, k, k));
    }

    auto t = triple_glue(F, left, right, base);
    ConstructionReport report;
    report.embedded_F = t.top_embedding;
    RectLattice R     = t.result;
    report.stages.emplace_back("glued", t.result);

    // Color x of F meets the diagonal eye k = x of the base in a flap cell.
    for (std::size_t x = 0; x < j; ++x) {
      EyeRecord rec;
      rec.color_x = conF.ji()[x];
      rec.color_y = x;
      if (first[x].left) {
        rec.flap = "left";
        rec.cell = map_cell(crossing_cell(left, first[x].index, x), t.left_embedding);
      } else {
        rec.flap = "right";
        rec.cell = map_cell(crossing_cell(right, x, first[x].index), t.right_embedding);
      }
      R = insert_eye(R, rec.cell);
      report.eye_log.push_back(std::move(rec));
    }

    auto const& L    = R.lattice;
    auto        fset = to_set(report.embedded_F);
    check_post(fset == up_set(L, report.embedded_F[F.lattice.bottom()]),
               "F is not the filter above its 0");
    check_post(is_cp_extension(L, fset), "not a congruence-preserving extension");
    auto conR = congruence_lattice(L);
    check_post(colors_on_chains(conR, R.upper_left, R.upper_right),
               "a color is missing on an upper chain");
    report.output      = std::move(R);
    report.color_table = color_table(report.output);
    return report;
  }

  ConstructionReport lower_boundary_color_extension(RectLattice const& F) {
    auto report = boundary_color_extension(F);
    auto conR   = congruence_lattice(report.output.lattice);
    check_post(colors_on_chains(conR,
                                report.output.lower_left,
                                report.output.lower_right),
               "a color is missing on a lower chain");
    return report;
  }

  ConstructionReport filter_representation(RectLattice const& F,
                                           RectLattice const& G,
                                           BoundedHom const&  phi) {
    auto conF = congruence_lattice(F.lattice);
    auto conG = congruence_lattice(G.lattice);
    check_hom(phi, conF, conG);
    auto ji_phi = ji_of_hom(phi);

    auto  ext  = boundary_color_extension(F);
    auto& R    = ext.output;
    auto  conR = congruence_lattice(R.lattice);

    auto left  = grid(G.bl(), R.tl());
    auto right = grid(R.tr(), G.br());
    auto t     = triple_glue(G, left, right, R);

    auto f_in_l = compose(ext.embedded_F, t.bottom_embedding);
    auto on_tl  = restricted_colors(conR, R.upper_left, ext.embedded_F, conF);
    auto on_tr  = restricted_colors(conR, R.upper_right, ext.embedded_F, conF);

    ConstructionReport report;
    report.embedded_F = f_in_l;
    report.embedded_G = t.top_embedding;
    RectLattice L     = t.result;
    report.stages.emplace_back("extension", R);
    report.stages.emplace_back("glued", t.result);
    for (std::size_t x = 0; x < conG.ji().size(); ++x) {
      auto a = first_lower_edge(G, conG, x);
      if (!a) {
        throw Error(ErrorKind::color_missing_on_lower_boundary,
                    "join-irreducible congruence "
                        + format_blocks(conG.congruence(conG.ji()[x]))
                        + " of G colors no lower-boundary edge");
      }
      std::size_t y = conF.ji()[ji_phi(static_cast<Element>(x))];
      EyeRecord   rec;
      rec.color_x = conG.ji()[x];
      rec.color_y = y;
      if (a->left) {
        auto r   = find_index(on_tl, y, "color missing on the upper-left chain");
        rec.flap = "left";
        rec.cell = map_cell(crossing_cell(left, a->index, r), t.left_embedding);
      } else {
        auto r   = find_index(on_tr, y, "color missing on the upper-right chain");
        rec.flap = "right";
        rec.cell = map_cell(crossing_cell(right, r, a->index), t.right_embedding);
      }
      L = insert_eye(L, rec.cell);
      report.eye_log.push_back(std::move(rec));
    }

    auto const& M     = L.lattice;
    Element     zeroG = report.embedded_G[G.lattice.bottom()];
    check_post(to_set(report.embedded_G) == up_set(M, zeroG), "G is not a filter");
    check_post(to_set(t.bottom_embedding) == down_set(M, zeroG),
               "the ideal below G is not R");
    check_post(is_convex_sublattice(M, to_set(f_in_l)), "F is not convex");
    check_diagram(M, f_in_l, report.embedded_G, conF, conG, phi);
    report.output      = std::move(L);
    report.color_table = color_table(report.output);
    return report;
  }

  CollapseReport upper_chain_collapse_check(RectLattice const& G) {
    auto con   = congruence_lattice(G.lattice);
    auto edges = chain_edges(G.upper_left);
    auto more  = chain_edges(G.upper_right);
    edges.insert(edges.end(), more.begin(), more.end());
    auto collapses_upper = [&](Congruence const& alpha) {
      return std::any_of(edges.begin(), edges.end(), [&](Cover const& e) {
        return collapses(alpha, e);
      });
    };

    CollapseReport report{true, {}, true};
    for (std::size_t a : con.atoms()) {
      if (!collapses_upper(con.congruence(a))) {
        report.holds = false;
        report.witnesses.push_back(con.congruence(a));
      }
    }
    bool full = true;
    for (std::size_t i = 1; i < con.size(); ++i) {
      full = full && collapses_upper(con.congruence(i));
    }
    report.agrees = full == report.holds;
    return report;
  }

  ConstructionReport ideal_representation(RectLattice const& F,
                                          RectLattice const& G,
                                          BoundedHom const&  phi) {
    auto check = upper_chain_collapse_check(G);
    if (!check.holds) {
      throw Error(ErrorKind::condition_i_fails,
                  "congruence " + format_blocks(check.witnesses.front())
                      + " collapses no edge of an upper chain");
    }
    auto conF = congruence_lattice(F.lattice);
    auto conG = congruence_lattice(G.lattice);
    check_hom(phi, conF, conG);
    auto ji_phi = ji_of_hom(phi);

    auto  ext  = lower_boundary_color_extension(F);
    auto& Fp   = ext.output;
    auto  conP = congruence_lattice(Fp.lattice);

    auto left  = grid(Fp.bl(), G.tl());
    auto right = grid(G.tr(), Fp.br());
    auto t     = triple_glue(Fp, left, right, G);

    auto on_bl = restricted_colors(conP, Fp.lower_left, ext.embedded_F, conF);
    auto on_br = restricted_colors(conP, Fp.lower_right, ext.embedded_F, conF);

    ConstructionReport report;
    report.embedded_F = compose(ext.embedded_F, t.top_embedding);
    report.embedded_G = t.bottom_embedding;
    RectLattice L     = t.result;
    report.stages.emplace_back("extension", Fp);
    report.stages.emplace_back("glued", t.result);

    auto connect = [&](Cover edge) {
      auto        x = conG.edge_color(edge);
      std::size_t y = conF.ji()[ji_phi(static_cast<Element>(x))];
      EyeRecord   rec;
      rec.color_x = conG.ji()[x];
      rec.color_y = y;
      return rec;
    };
    auto tl = chain_edges(G.upper_left);
    for (std::size_t k = 0; k < tl.size(); ++k) {
      auto rec = connect(tl[k]);
      auto r   = find_index(on_bl, rec.color_y, "color missing on the lower-left chain");
      rec.flap = "left";
      rec.cell = map_cell(crossing_cell(left, r, k), t.left_embedding);
      L        = insert_eye(L, rec.cell);
      report.eye_log.push_back(std::move(rec));
    }
    auto tr = chain_edges(G.upper_right);
    for (std::size_t k = 0; k < tr.size(); ++k) {
      auto rec = connect(tr[k]);
      auto c   = find_index(on_br, rec.color_y, "color missing on the lower-right chain");
      rec.flap = "right";
      rec.cell = map_cell(crossing_cell(right, k, c), t.right_embedding);
      L        = insert_eye(L, rec.cell);
      report.eye_log.push_back(std::move(rec));
    }

    auto const& M   = L.lattice;
    Element     oneG = report.embedded_G[G.lattice.top()];
    check_post(to_set(report.embedded_G) == down_set(M, oneG), "G is not an ideal");
    check_post(is_filter(M, to_set(report.embedded_F)), "F is not a filter");
    check_diagram(M, report.embedded_F, report.embedded_G, conF, conG, phi);
    report.output      = std::move(L);
    report.color_table = color_table(report.output);
    return report;
  }

  ConstructionReport simple_ideal_embedding(RectLattice const& G) {
    auto F    = m3_rect();
    auto conF = congruence_lattice(F.lattice);
    auto conG = congruence_lattice(G.lattice);
    auto phi  = make_bounded_hom(conF.lattice(),
                                conG.lattice(),
                                {static_cast<Element>(conG.bottom_index()),
                                 static_cast<Element>(conG.top_index())});
    auto report = ideal_representation(F, G, phi);
    check_post(is_simple(report.output.lattice), "the output is not simple");
    return report;
  }

}  // namespace latcon
