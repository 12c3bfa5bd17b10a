#include "latcon/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "latcon/rectangular.hpp"

namespace latcon {

  bool VerificationReport::summary() const {
    return std::all_of(
        checks.begin(), checks.end(), [](Check const& c) { return c.passed; });
  }

  void VerificationReport::add(std::string name, bool passed, std::string witness) {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }

  std::string to_text(VerificationReport const& r) {
    std::string out;
    for (auto const& c : r.checks) {
      out += (c.passed ? "PASS " : "FAIL ") + c.name;
      if (!c.witness.empty()) {
        out += ": " + c.witness;
      }
      out += "\n";
    }
    out += r.summary() ? "summary: pass\n" : "summary: fail\n";
    return out;
  }

  namespace {
    void validate_embedding(FiniteLattice const&        L,
                            FiniteLattice const&        K,
                            std::vector<Element> const& e,
                            char const*                 name) {
      auto fail = [&](std::string const& why) {
        throw Error(ErrorKind::embedding_invalid, std::string(name) + ": " + why);
      };
      if (e.size() != K.size()) {
        fail("has " + std::to_string(e.size()) + " entries for "
             + std::to_string(K.size()) + " elements");
      }
      for (Element x : e) {
        if (x >= L.size()) {
          fail("image " + std::to_string(x) + " out of range");
        }
      }
      auto image = to_set(e);
      if (image.size() != e.size()) {
        fail("not injective");
      }
      for (Element x = 0; x < K.size(); ++x) {
        for (Element y = 0; y < K.size(); ++y) {
          if (K.leq(x, y) != L.leq(e[x], e[y])) {
            fail("not an order-embedding at (" + std::to_string(x) + ", "
                 + std::to_string(y) + ")");
          }
        }
      }
      if (!is_convex_sublattice(L, image)) {
        fail("image is not a convex sublattice");
      }
    }

    VerificationReport verify_representation(FiniteLattice const&        L,
                                             FiniteLattice const&        F,
                                             std::vector<Element> const& f_in_l,
                                             FiniteLattice const&        G,
                                             std::vector<Element> const& g_in_l,
                                             BoundedHom const&           phi,
                                             bool                        filter) {
      validate_embedding(L, F, f_in_l, "F");
      validate_embedding(L, G, g_in_l, "G");

      VerificationReport report;
      auto               conF = congruence_lattice(F);
      auto               conG = congruence_lattice(G);
      auto               conL = congruence_lattice(L);

      auto gset = to_set(g_in_l);
      if (filter) {
        auto up = up_set(L, g_in_l[G.bottom()]);
        std::string w;
        if (up != gset) {
          w = "up-set of 0_G has " + std::to_string(up.size()) + " elements, G has "
              + std::to_string(gset.size());
        }
        report.add("G is a filter of L", up == gset, w);
      } else {
        auto        down = down_set(L, g_in_l[G.top()]);
        std::string w;
        if (down != gset) {
          w = "down-set of 1_G has " + std::to_string(down.size())
              + " elements, G has " + std::to_string(gset.size());
        }
        report.add("G is an ideal of L", down == gset, w);
      }
      report.add("F is a convex sublattice of L", true);

      bool hom_ok = phi.source() == conF.lattice() && phi.target() == conG.lattice();
      report.add("phi runs from Con F to Con G",
                 hom_ok,
                 hom_ok ? "" : "source or target differs from the computed Con");

      // restriction Con L -> Con F
      std::vector<std::optional<std::size_t>> eta(conF.size());
      std::string                             why;
      for (std::size_t i = 0; i < conL.size() && why.empty(); ++i) {
        auto f = conF.index_of(restrict_along(conL.congruence(i), f_in_l));
        if (!f) {
          why = format_blocks(conL.congruence(i)) + " restricts to a non-congruence";
        } else if (eta[*f]) {
          why = format_blocks(conL.congruence(i)) + " and "
                + format_blocks(conL.congruence(*eta[*f])) + " restrict alike";
        } else {
          eta[*f] = i;
        }
      }
      if (why.empty() && conL.size() != conF.size()) {
        why = "|Con L| = " + std::to_string(conL.size())
              + ", |Con F| = " + std::to_string(conF.size());
      }
      bool bijective = why.empty();
      report.add("restriction Con L -> Con F is a bijection", bijective, why);

      // phi(a|F) = a|G, with a = eta(b) for b in Con F
      std::string diagram;
      if (!hom_ok) {
        diagram = "skipped: phi has the wrong source or target";
      }
      for (std::size_t b = 0; b < conF.size() && diagram.empty(); ++b) {
        std::vector<std::size_t> alphas;
        if (bijective) {
          alphas.push_back(*eta[b]);
        } else {
          for (std::size_t i = 0; i < conL.size(); ++i) {
            auto f = conF.index_of(restrict_along(conL.congruence(i), f_in_l));
            if (f && *f == b) {
              alphas.push_back(i);
            }
          }
        }
        for (std::size_t i : alphas) {
          auto const& alpha = conL.congruence(i);
          auto        g     = conG.index_of(restrict_along(alpha, g_in_l));
          if (!g || *g != phi(static_cast<Element>(b))) {
            diagram = format_blocks(alpha);
            break;
          }
        }
      }
      report.add("phi(a|F) = a|G for all a in Con L", diagram.empty(), diagram);
      return report;
    }

    // All partitions of 0..n-1 as label vectors, restricted growth order.
    void for_each_partition(std::size_t                                      n,
                            std::function<void(std::vector<Element> const&)> f) {
      std::vector<Element>                      labels(n, 0);
      std::function<void(std::size_t, Element)> go = [&](std::size_t i, Element k) {
        if (i == n) {
          f(labels);
          return;
        }
        for (Element b = 0; b <= k; ++b) {
          labels[i] = b;
          go(i + 1, b == k ? k + 1 : k);
        }
      };
      go(0, 0);
    }

    struct Rect {
      std::string name;
      RectLattice R;
    };

    struct IdealPair {
      Rect const* L;
      ElementSet  ideal;
      RectLattice I;  // in ids of `ideal`
    };

    struct Tally {
      std::size_t configurations = 0;
      std::string counterexample;

      void fail(std::string w) {
        if (counterexample.empty()) {
          counterexample = std::move(w);
        }
      }
      [[nodiscard]] std::string note(std::string const& extra = {}) const {
        if (!counterexample.empty()) {
          return counterexample;
        }
        return std::to_string(configurations) + " configurations" + extra;
      }
    };

    bool same_on(Congruence const&           a,
                 std::vector<Element> const& ca,
                 Congruence const&           b,
                 std::vector<Element> const& cb) {
      return restrict_along(a, ca) == restrict_along(b, cb);
    }

    ElementSet image_of(std::vector<std::vector<Element> const*> parts) {
      std::vector<Element> all;
      for (auto const* p : parts) {
        all.insert(all.end(), p->begin(), p->end());
      }
      return to_set(std::move(all));
    }

    ElementSet intersect(ElementSet const& a, ElementSet const& b) {
      ElementSet r;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
      return r;
    }
  }  // namespace

  VerificationReport verify_filter_representation(FiniteLattice const&        L,
                                                  FiniteLattice const&        F,
                                                  std::vector<Element> const& f_in_l,
                                                  FiniteLattice const&        G,
                                                  std::vector<Element> const& g_in_l,
                                                  BoundedHom const&           phi) {
    return verify_representation(L, F, f_in_l, G, g_in_l, phi, true);
  }

  VerificationReport verify_ideal_representation(FiniteLattice const&        L,
                                                 FiniteLattice const&        F,
                                                 std::vector<Element> const& f_in_l,
                                                 FiniteLattice const&        G,
                                                 std::vector<Element> const& g_in_l,
                                                 BoundedHom const&           phi) {
    return verify_representation(L, F, f_in_l, G, g_in_l, phi, false);
  }

  VerificationReport lemma_suite(std::vector<CatalogEntry> const& catalog,
                                 LemmaSuiteOptions                opts) {
    VerificationReport report;
    if (catalog.empty()) {
      report.add("catalog", true, "empty catalog, every lemma holds vacuously");
      return report;
    }

    std::vector<Rect>        rects;
    std::vector<std::string> skipped;
    for (auto const& e : catalog) {
      try {
        rects.push_back({e.name, make_rectangular(e.lattice)});
      } catch (Error const& err) {
        skipped.push_back(e.name + " (" + std::string(to_string(err.kind())) + ")");
      }
    }
    std::string skip_note;
    for (auto const& s : skipped) {
      skip_note += (skip_note.empty() ? "; skipped as not rectangular: " : ", ") + s;
    }

    // Rectangular ideals of rectangular catalog lattices.
    std::vector<IdealPair> pairs;
    for (auto const& r : rects) {
      auto const& L = r.R.lattice;
      for (Element a = 0; a < L.size(); ++a) {
        auto I = down_set(L, a);
        try {
          pairs.push_back({&r, I, make_rectangular(sublattice(L, I))});
        } catch (Error const&) {
        }
      }
    }

    {
      Tally t;
      for (auto const& e : catalog) {
        auto const& L = e.lattice;
        for (Element a = 0; a < L.size(); ++a) {
          auto I = down_set(L, a);
          if (I.size() > opts.max_meet_ideal) {
            continue;
          }
          auto S = sublattice(L, I);
          for_each_partition(I.size(), [&](std::vector<Element> const& labels) {
            Congruence alpha(labels);
            if (!is_meet_congruence(S, alpha)) {
              return;
            }
            ++t.configurations;
            auto beta = singleton_extension(L, I, alpha);
            if (!is_meet_congruence(L, beta)) {
              t.fail(e.name + ", ideal below " + std::to_string(a) + ": "
                     + format_blocks(beta));
            }
          });
        }
      }
      report.add("lemma meet", t.counterexample.empty(), t.note());
    }

    {
      Tally ideal, diff;
      for (auto const& p : pairs) {
        auto const& R   = p.L->R;
        auto const& L   = R.lattice;
        Element     lcI = p.ideal[p.I.lc];
        Element     rcI = p.ideal[p.I.rc];
        ++ideal.configurations;
        auto on = [](std::vector<Element> const& chain, Element x) {
          return std::find(chain.begin(), chain.end(), x) != chain.end();
        };
        if (!on(R.lower_left, lcI) || !on(R.lower_right, rcI)) {
          ideal.fail(p.L->name + ", ideal of size " + std::to_string(p.ideal.size()));
        }
        for (Element x = 0; x < L.size(); ++x) {
          if (std::binary_search(p.ideal.begin(), p.ideal.end(), x)) {
            continue;
          }
          ++diff.configurations;
          if (!L.lt(lcI, x) && !L.lt(rcI, x)) {
            diff.fail(p.L->name + ", element " + std::to_string(x));
          }
        }
      }
      report.add("lemma ideal", ideal.counterexample.empty(), ideal.note(skip_note));
      report.add("lemma diff", diff.counterexample.empty(), diff.note(skip_note));
    }

    {
      Tally t;
      for (auto const& r : rects) {
        auto const& R = r.R;
        for (Element x = 0; x < R.size(); ++x) {
          if (std::binary_search(R.eyes.begin(), R.eyes.end(), x)) {
            continue;
          }
          ++t.configurations;
          auto const& L = R.lattice;
          if (L.join(L.meet(x, R.lc), L.meet(x, R.rc)) != x) {
            t.fail(r.name + ", element " + std::to_string(x));
          }
        }
      }
      report.add("lemma join", t.counterexample.empty(), t.note(skip_note));
    }

    {
      Tally t;
      for (auto const& p : pairs) {
        auto S   = sublattice(p.L->R.lattice, p.ideal);
        auto con = congruence_lattice(S);
        auto up  = chain_edges(p.I.upper_left);
        auto ur  = chain_edges(p.I.upper_right);
        up.insert(up.end(), ur.begin(), ur.end());
        for (auto const& alpha : con.congruences()) {
          if (std::any_of(up.begin(), up.end(), [&](Cover const& e) {
                return collapses(alpha, e);
              })) {
            continue;
          }
          ++t.configurations;
          auto beta = singleton_extension(p.L->R.lattice, p.ideal, alpha);
          if (!is_congruence(p.L->R.lattice, beta)) {
            t.fail(p.L->name + ": " + format_blocks(beta));
          }
        }
      }
      report.add("lemma nosimple", t.counterexample.empty(), t.note(skip_note));
    }

    {
      Tally t;
      auto  check_gluing = [&](std::string const&          name,
                              FiniteLattice const&        A,
                              std::vector<Element> const& filter,
                              FiniteLattice const&        B,
                              std::vector<Element> const& ideal,
                              GlueSide                    side) {
        if (A.size() + B.size() - filter.size() > opts.max_assembly) {
          return;
        }
        auto g    = glue(A, filter, B, ideal, side);
        auto conA = congruence_lattice(A);
        auto conB = congruence_lattice(B);
        std::set<Congruence> results;
        for (auto const& a : conA.congruences()) {
          for (auto const& b : conB.congruences()) {
            ++t.configurations;
            bool agree = same_on(a, filter, b, ideal);
            try {
              auto alpha = glue_congruence_pair(g, a, b);
              if (!agree || !is_congruence(g.lattice, alpha)
                  || restrict_along(alpha, g.lower_embedding) != a
                  || restrict_along(alpha, g.upper_embedding) != b) {
                t.fail(name + ": " + format_blocks(alpha));
              }
              results.insert(alpha);
            } catch (Error const& e) {
              if (agree || e.kind() != ErrorKind::incompatible) {
                t.fail(name + ": " + e.what());
              }
            }
          }
        }
        if (results.size() != congruence_lattice(g.lattice).size()) {
          t.fail(name + ": " + std::to_string(results.size())
                 + " compatible pairs for |Con L| = "
                 + std::to_string(congruence_lattice(g.lattice).size()));
        }
      };
      for (auto const& a : rects) {
        for (auto const& b : rects) {
          if (a.R.tl() == b.R.br()) {
            check_gluing(a.name + " / " + b.name + " on the left",
                         a.R.lattice,
                         a.R.upper_left,
                         b.R.lattice,
                         b.R.lower_right,
                         GlueSide::filter_left);
          }
          if (a.R.tr() == b.R.bl()) {
            check_gluing(a.name + " / " + b.name + " on the right",
                         a.R.lattice,
                         a.R.upper_right,
                         b.R.lattice,
                         b.R.lower_left,
                         GlueSide::filter_right);
          }
        }
      }
      report.add("lemma gluing", t.counterexample.empty(), t.note(skip_note));
    }

    {
      Tally uy, props, size, main;
      for (auto const& top : rects) {
        for (auto const& bottom : rects) {
          std::string name = top.name + " over " + bottom.name;
          auto        t    = triple_glue(top.R,
                                grid(top.R.bl(), bottom.R.tl()),
                                grid(bottom.R.tr(), top.R.br()),
                                bottom.R);
          auto const& L    = t.result.lattice;
          auto        X    = to_set(t.bottom_embedding);
          auto        Y    = to_set(t.top_embedding);
          auto        U    = to_set(t.left_embedding);
          auto        V    = to_set(t.right_embedding);
          auto        A    = image_of({&t.bottom_embedding, &t.left_embedding});
          auto        B    = image_of({&t.top_embedding, &t.right_embedding});

          ++size.configurations;
          if (L.size() + t.top.bl() + t.top.br() + t.bottom.tl() + t.bottom.tr()
              != t.top.size() + t.bottom.size() + t.left_flap.size()
                     + t.right_flap.size() + 1) {
            size.fail(name);
          }

          ++props.configurations;
          auto SA = sublattice(L, A);
          auto SB = sublattice(L, B);
          auto in = [](ElementSet const& outer, ElementSet const& inner) {
            ElementSet local;
            for (Element x : inner) {
              local.push_back(static_cast<Element>(
                  std::lower_bound(outer.begin(), outer.end(), x) - outer.begin()));
            }
            return local;
          };
          if (X != down_set(L, t.c) || Y != up_set(L, t.c)) {
            props.fail(name + ": pieces are not the ideal and filter of c");
          } else if (!is_ideal(L, A)) {
            props.fail(name + ": (Pi)");
          } else if (!is_filter(L, B)) {
            props.fail(name + ": (Pii)");
          } else if (!is_filter(SA, in(A, U)) || !is_ideal(SA, in(A, X))) {
            props.fail(name + ": (Piii)");
          } else if (!is_ideal(SB, in(B, V)) || !is_filter(SB, in(B, Y))) {
            props.fail(name + ": (Piv)");
          } else if (intersect(U, V) != ElementSet{t.c}) {
            props.fail(name + ": (Pv)");
          }

          ++uy.configurations;
          auto UY = image_of({&t.left_embedding, &t.top_embedding});
          auto XV = image_of({&t.bottom_embedding, &t.right_embedding});
          if (!is_sublattice(L, UY)) {
            uy.fail(name + ": left flap and top do not form a sublattice");
          } else if (!is_ideal(sublattice(L, UY), in(UY, U))
                     || !is_filter(sublattice(L, UY), in(UY, Y))) {
            uy.fail(name + ": left flap not an ideal or top not a filter");
          } else if (!is_sublattice(L, XV)) {
            uy.fail(name + ": bottom and right flap do not form a sublattice");
          } else if (!is_filter(sublattice(L, XV), in(XV, V))
                     || !is_ideal(sublattice(L, XV), in(XV, X))) {
            uy.fail(name + ": right flap not a filter or bottom not an ideal");
          }

          if (L.size() > opts.max_assembly) {
            continue;
          }
          // Compatible quadruples against Con L, pruning on the facing
          // boundaries as the pieces are chosen.
          auto const conT = congruence_lattice(t.top.lattice);
          auto const conU = congruence_lattice(t.left_flap.lattice);
          auto const conV = congruence_lattice(t.right_flap.lattice);
          auto const conX = congruence_lattice(t.bottom.lattice);
          std::set<Congruence> results;
          for (auto const& ax : conX.congruences()) {
            for (auto const& au : conU.congruences()) {
              if (!same_on(ax, t.bottom.upper_left, au, t.left_flap.lower_right)) {
                continue;
              }
              for (auto const& av : conV.congruences()) {
                if (!same_on(ax, t.bottom.upper_right, av, t.right_flap.lower_left)) {
                  continue;
                }
                for (auto const& ay : conT.congruences()) {
                  if (!same_on(ay, t.top.lower_right, av, t.right_flap.upper_left)
                      || !same_on(ay, t.top.lower_left, au, t.left_flap.upper_right)) {
                    continue;
                  }
                  ++main.configurations;
                  try {
                    auto alpha = triple_glue_congruence(t, ay, au, av, ax);
                    if (!is_congruence(L, alpha)
                        || restrict_along(alpha, t.top_embedding) != ay
                        || restrict_along(alpha, t.left_embedding) != au
                        || restrict_along(alpha, t.right_embedding) != av
                        || restrict_along(alpha, t.bottom_embedding) != ax) {
                      main.fail(name + ": " + format_blocks(alpha));
                    }
                    results.insert(alpha);
                  } catch (Error const& e) {
                    main.fail(name + ": " + e.what());
                  }
                }
              }
            }
          }
          if (results.size() != congruence_lattice(L).size()) {
            main.fail(name + ": " + std::to_string(results.size())
                      + " compatible quadruples for |Con L| = "
                      + std::to_string(congruence_lattice(L).size()));
          }
        }
      }
      report.add("lemma UY", uy.counterexample.empty(), uy.note(skip_note));
      report.add("triple gluing properties (Pi)-(Pv)",
                 props.counterexample.empty(),
                 props.note(skip_note));
      report.add("triple gluing size formula", size.counterexample.empty(), size.note());
      report.add("lemma main", main.counterexample.empty(), main.note(skip_note));
    }
    return report;
  }

}  // namespace latcon
