#pragma once

// Bounded homomorphisms of finite distributive lattices and isotone maps of
// their join-irreducible posets (the Birkhoff correspondence).

#include <string>
#include <vector>

#include "latcon/core.hpp"

namespace latcon {

  // {0,1}-homomorphism between finite distributive lattices. Instances are
  // validated on construction (make_bounded_hom).
  class BoundedHom {
   public:
    BoundedHom() = default;

    [[nodiscard]] FiniteLattice const& source() const noexcept {
      return _source;
    }
    [[nodiscard]] FiniteLattice const& target() const noexcept {
      return _target;
    }
    [[nodiscard]] std::vector<Element> const& map() const noexcept {
      return _map;
    }
    [[nodiscard]] Element operator()(Element x) const {
      return _map[x];
    }

    friend bool operator==(BoundedHom const&, BoundedHom const&) = default;

   private:
    friend BoundedHom make_bounded_hom(FiniteLattice, FiniteLattice, std::vector<Element>);

    FiniteLattice        _source;
    FiniteLattice        _target;
    std::vector<Element> _map;
  };

  // Throws NotDistributive, NotBounded or NotHomomorphic.
  BoundedHom make_bounded_hom(FiniteLattice        D,
                              FiniteLattice        E,
                              std::vector<Element> assignment);

  // Join-irreducible elements of D below a.
  ElementSet spec(FiniteLattice const& D, Element a);

  // x in Ji E  |->  meet of all e in D with x <= phi(e). Source of the result
  // is join_irreducibles(E).order, target join_irreducibles(D).order.
  IsotoneMap ji_of_hom(BoundedHom const& phi);

  // e in D  |->  join in E of the x in Ji E with psi(x) <= e.
  BoundedHom hom_of_isotone(IsotoneMap const&    psi,
                            FiniteLattice const& D,
                            FiniteLattice const& E);

  struct BrtReport {
    bool        bijection_ok;       // hom_of_isotone(ji_of_hom(phi)) == phi
    bool        injective_iff_onto;
    bool        onto_iff_embedding;
    bool        injective;
    bool        surjective;
    bool        ji_onto;
    bool        ji_embedding;
    std::string witness;  // empty when all flags hold

    [[nodiscard]] bool ok() const noexcept {
      return bijection_ok && injective_iff_onto && onto_iff_embedding;
    }
  };

  BrtReport brt_report(BoundedHom const& phi);

  // All isotone maps source -> target, in lexicographic order of assignment.
  std::vector<IsotoneMap> isotone_maps(Poset const& source, Poset const& target);

  // All bounded homomorphisms D -> E, obtained from isotone maps
  // Ji E -> Ji D; ordered as the isotone maps are.
  std::vector<BoundedHom> bounded_homs(FiniteLattice const& D, FiniteLattice const& E);

}  // namespace latcon
