#include "latcon/birkhoff.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace latcon {

  BoundedHom make_bounded_hom(FiniteLattice        D,
                              FiniteLattice        E,
                              std::vector<Element> assignment) {
    if (assignment.size() != D.size()) {
      throw Error(ErrorKind::not_homomorphic,
                  "map has " + std::to_string(assignment.size())
                      + " entries for a source of size "
                      + std::to_string(D.size()));
    }
    for (Element v : assignment) {
      E.check(v);
    }
    if (!is_distributive(D) || !is_distributive(E)) {
      throw Error(ErrorKind::not_distributive,
                  "bounded homomorphisms are only handled between "
                  "distributive lattices");
    }
    if (assignment[D.bottom()] != E.bottom() || assignment[D.top()] != E.top()) {
      throw Error(ErrorKind::not_bounded, "0 or 1 is not preserved");
    }
    for (Element x = 0; x < D.size(); ++x) {
      for (Element y = x + 1; y < D.size(); ++y) {
        if (assignment[D.meet(x, y)] != E.meet(assignment[x], assignment[y])
            || assignment[D.join(x, y)] != E.join(assignment[x], assignment[y])) {
          throw Error(ErrorKind::not_homomorphic,
                      "meet or join of " + std::to_string(x) + " and "
                          + std::to_string(y) + " is not preserved");
        }
      }
    }
    BoundedHom phi;
    phi._source = std::move(D);
    phi._target = std::move(E);
    phi._map    = std::move(assignment);
    return phi;
  }

  ElementSet spec(FiniteLattice const& D, Element a) {
    D.check(a);
    ElementSet result;
    for (Element p = 0; p < D.size(); ++p) {
      if (D.lower_covers(p).size() == 1 && D.leq(p, a)) {
        result.push_back(p);
      }
    }
    return result;
  }

  IsotoneMap ji_of_hom(BoundedHom const& phi) {
    auto const& D   = phi.source();
    auto const& E   = phi.target();
    auto        jiD = join_irreducibles(D);
    auto        jiE = join_irreducibles(E);

    std::vector<Element> assignment;
    for (Element x : jiE.elements) {
      Element m = D.top();
      for (Element e = 0; e < D.size(); ++e) {
        if (E.leq(x, phi(e))) {
          m = D.meet(m, e);
        }
      }
      auto pos = jiD.position(m);
      if (!pos) {
        throw Error(ErrorKind::postcondition_failed,
                    "image of " + std::to_string(x) + " is "
                        + std::to_string(m) + ", which is not join-irreducible");
      }
      assignment.push_back(static_cast<Element>(*pos));
    }
    return make_isotone_map(jiE.order, jiD.order, std::move(assignment));
  }

  BoundedHom hom_of_isotone(IsotoneMap const&    psi,
                            FiniteLattice const& D,
                            FiniteLattice const& E) {
    auto jiD = join_irreducibles(D);
    auto jiE = join_irreducibles(E);
    if (psi.source.size() != jiE.elements.size()
        || psi.target.size() != jiD.elements.size()) {
      throw Error(ErrorKind::not_isotone,
                  "isotone map does not run between Ji E and Ji D");
    }
    std::vector<Element> assignment(D.size());
    for (Element e = 0; e < D.size(); ++e) {
      Element j = E.bottom();
      for (std::size_t x = 0; x < jiE.elements.size(); ++x) {
        if (D.leq(jiD.elements[psi(static_cast<Element>(x))], e)) {
          j = E.join(j, jiE.elements[x]);
        }
      }
      assignment[e] = j;
    }
    return make_bounded_hom(D, E, std::move(assignment));
  }

  BrtReport brt_report(BoundedHom const& phi) {
    auto const& D   = phi.source();
    auto const& E   = phi.target();
    auto        psi = ji_of_hom(phi);

    BrtReport report{};
    report.bijection_ok = hom_of_isotone(psi, D, E) == phi;

    auto image = phi.map();
    std::sort(image.begin(), image.end());
    report.injective
        = std::adjacent_find(image.begin(), image.end()) == image.end();
    image.erase(std::unique(image.begin(), image.end()), image.end());
    report.surjective = image.size() == E.size();

    auto ji_image = psi.assignment;
    std::sort(ji_image.begin(), ji_image.end());
    ji_image.erase(std::unique(ji_image.begin(), ji_image.end()), ji_image.end());
    report.ji_onto = ji_image.size() == psi.target.size();

    report.ji_embedding = true;
    for (Element x = 0; x < psi.source.size(); ++x) {
      for (Element y = 0; y < psi.source.size(); ++y) {
        if (psi.source.leq(x, y) != psi.target.leq(psi(x), psi(y))) {
          report.ji_embedding = false;
        }
      }
    }
    report.injective_iff_onto = report.injective == report.ji_onto;
    report.onto_iff_embedding = report.surjective == report.ji_embedding;

    if (!report.bijection_ok) {
      report.witness = "hom_of_isotone(ji_of_hom(phi)) differs from phi";
    } else if (!report.injective_iff_onto) {
      report.witness = std::string("phi is ")
                       + (report.injective ? "" : "not ")
                       + "one-to-one but Ji phi is "
                       + (report.ji_onto ? "" : "not ") + "onto";
    } else if (!report.onto_iff_embedding) {
      report.witness = std::string("phi is ") + (report.surjective ? "" : "not ")
                       + "onto but Ji phi is "
                       + (report.ji_embedding ? "" : "not ")
                       + "an order-embedding";
    }
    return report;
  }

  std::vector<IsotoneMap> isotone_maps(Poset const& source, Poset const& target) {
    std::vector<std::vector<Element>> found;
    auto const&                       order = source.linear_extension();
    std::vector<Element>              assignment(source.size(), 0);

    std::function<void(std::size_t)> extend = [&](std::size_t i) {
      if (i == order.size()) {
        found.push_back(assignment);
        return;
      }
      Element x = order[i];
      for (Element v = 0; v < target.size(); ++v) {
        bool ok = true;
        for (Element y : source.lower_covers(x)) {
          if (!target.leq(assignment[y], v)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          assignment[x] = v;
          extend(i + 1);
        }
      }
    };
    extend(0);
    std::sort(found.begin(), found.end());

    std::vector<IsotoneMap> result;
    result.reserve(found.size());
    for (auto& a : found) {
      result.push_back(IsotoneMap{source, target, std::move(a)});
    }
    return result;
  }

  std::vector<BoundedHom> bounded_homs(FiniteLattice const& D,
                                       FiniteLattice const& E) {
    auto                    jiD = join_irreducibles(D);
    auto                    jiE = join_irreducibles(E);
    std::vector<BoundedHom> result;
    for (auto const& psi : isotone_maps(jiE.order, jiD.order)) {
      result.push_back(hom_of_isotone(psi, D, E));
    }
    return result;
  }

}  // namespace latcon
