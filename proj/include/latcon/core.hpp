#pragma once

// Finite posets and lattices.
//
// Elements are dense identifiers 0..n-1. Every element carries its upper and
// lower covers as ordered lists; for planar lattices the order is
// left-to-right in the diagram. Order-theoretic operations ignore that order,
// planar constructions (gluing, eyes, boundary walks) rely on it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latcon/error.hpp"

namespace latcon {

  using Element    = std::uint32_t;
  using ElementSet = std::vector<Element>;  // sorted, no duplicates

  struct Cover {
    Element lower;
    Element upper;

    friend auto operator<=>(Cover const&, Cover const&) = default;
  };

  using CoverLists = std::vector<std::vector<Element>>;

  class Poset {
   public:
    Poset() = default;

    // Cover lists are taken in the order given: the upper covers of x appear
    // in the order in which the pairs (x, _) occur in `covers`, likewise for
    // lower covers.
    Poset(std::size_t size, std::vector<Cover> const& covers);

    // Ordered cover lists. `lower` must list, for every element, exactly the
    // elements whose `upper` list contains it.
    Poset(CoverLists upper, CoverLists lower);

    [[nodiscard]] std::size_t size() const noexcept {
      return _upper.size();
    }

    [[nodiscard]] bool leq(Element x, Element y) const {
      return _leq[x * size() + y] != 0;
    }

    [[nodiscard]] bool lt(Element x, Element y) const {
      return x != y && leq(x, y);
    }

    [[nodiscard]] bool comparable(Element x, Element y) const {
      return leq(x, y) || leq(y, x);
    }

    [[nodiscard]] std::vector<Element> const& upper_covers(Element x) const {
      return _upper[x];
    }

    [[nodiscard]] std::vector<Element> const& lower_covers(Element x) const {
      return _lower[x];
    }

    [[nodiscard]] CoverLists const& upper_cover_lists() const noexcept {
      return _upper;
    }

    [[nodiscard]] CoverLists const& lower_cover_lists() const noexcept {
      return _lower;
    }

    [[nodiscard]] bool is_cover(Element x, Element y) const;

    // All covers, ordered by lower element then by position in its upper list.
    [[nodiscard]] std::vector<Cover> covers() const;

    [[nodiscard]] std::size_t number_of_covers() const noexcept {
      return _ncovers;
    }

    // A linear extension: every element appears after all elements below it.
    [[nodiscard]] std::vector<Element> const& linear_extension() const noexcept {
      return _topo;
    }

    friend bool operator==(Poset const& a, Poset const& b) {
      return a._upper == b._upper && a._lower == b._lower;
    }

   private:
    void init();

    CoverLists                _upper;
    CoverLists                _lower;
    std::vector<std::uint8_t> _leq;
    std::vector<Element>      _topo;
    std::size_t               _ncovers = 0;
  };

  class FiniteLattice {
   public:
    FiniteLattice() = default;
    explicit FiniteLattice(Poset order);

    [[nodiscard]] std::size_t size() const noexcept {
      return _order.size();
    }
    [[nodiscard]] Poset const& poset() const noexcept {
      return _order;
    }
    [[nodiscard]] bool leq(Element x, Element y) const {
      return _order.leq(x, y);
    }
    [[nodiscard]] bool lt(Element x, Element y) const {
      return _order.lt(x, y);
    }
    [[nodiscard]] Element meet(Element x, Element y) const {
      return _meet[x * size() + y];
    }
    [[nodiscard]] Element join(Element x, Element y) const {
      return _join[x * size() + y];
    }
    [[nodiscard]] Element bottom() const noexcept {
      return _bottom;
    }
    [[nodiscard]] Element top() const noexcept {
      return _top;
    }
    [[nodiscard]] std::vector<Element> const& upper_covers(Element x) const {
      return _order.upper_covers(x);
    }
    [[nodiscard]] std::vector<Element> const& lower_covers(Element x) const {
      return _order.lower_covers(x);
    }
    [[nodiscard]] bool is_cover(Element x, Element y) const {
      return _order.is_cover(x, y);
    }
    [[nodiscard]] std::vector<Cover> covers() const {
      return _order.covers();
    }

    // Throws ElementOutOfRange unless x < size().
    void check(Element x) const;

    friend bool operator==(FiniteLattice const& a, FiniteLattice const& b) {
      return a._order == b._order;
    }

   private:
    Poset                _order;
    std::vector<Element> _meet;
    std::vector<Element> _join;
    Element              _bottom = 0;
    Element              _top    = 0;
  };

  // Order-preserving map between posets; assignment is indexed by source
  // element.
  struct IsotoneMap {
    Poset                source;
    Poset                target;
    std::vector<Element> assignment;

    [[nodiscard]] Element operator()(Element x) const {
      return assignment[x];
    }
  };

  // Throws NotIsotone if the assignment is not order-preserving.
  IsotoneMap make_isotone_map(Poset source,
                              Poset target,
                              std::vector<Element> assignment);

  // Poset of join-irreducible elements. `elements[i]` is the lattice element
  // represented by poset element i; elements are listed in increasing id order.
  struct JiPoset {
    Poset                order;
    std::vector<Element> elements;

    [[nodiscard]] std::optional<std::size_t> position(Element x) const;
  };

  struct LatticeReport {
    bool distributive;
    bool modular;
    bool semimodular;
    bool lower_semimodular;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////////

  FiniteLattice make_lattice(std::size_t size, std::vector<Cover> const& covers);

  std::pair<Element, Element> meet_join(FiniteLattice const& L,
                                        Element              x,
                                        Element              y);

  FiniteLattice chain(std::size_t n);

  // Pairs (a, b) get id a * |B| + b. The first factor grows towards the
  // upper left of the diagram, the second towards the upper right.
  FiniteLattice direct_product(FiniteLattice const& A, FiniteLattice const& B);

  // 1_A is identified with 0_B. Elements of A keep their ids; the remaining
  // elements of B follow in id order.
  FiniteLattice glued_sum(FiniteLattice const& A, FiniteLattice const& B);

  // Order dual. Left-to-right order of the cover lists is preserved, so the
  // dual of a planar diagram is its reflection in a horizontal line.
  FiniteLattice dual(FiniteLattice const& L);

  // The lattice induced on S (any subset closed under meet and join), with
  // element i of the result standing for S[i]. Planar order is inherited.
  FiniteLattice sublattice(FiniteLattice const& L, ElementSet const& S);

  FiniteLattice m3();
  FiniteLattice n5();

  ////////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////////

  LatticeReport predicates(FiniteLattice const& L);

  bool is_distributive(FiniteLattice const& L);
  bool is_semimodular(FiniteLattice const& L);

  std::pair<ElementSet, ElementSet> ideal_filter(FiniteLattice const& L,
                                                 Element              a);

  ElementSet down_set(FiniteLattice const& L, Element a);
  ElementSet up_set(FiniteLattice const& L, Element a);

  bool is_sublattice(FiniteLattice const& L, ElementSet const& S);
  bool is_convex_sublattice(FiniteLattice const& L, ElementSet const& S);
  bool is_ideal(FiniteLattice const& L, ElementSet const& S);
  bool is_filter(FiniteLattice const& L, ElementSet const& S);

  bool is_join_irreducible(FiniteLattice const& L, Element x);
  bool is_doubly_irreducible(FiniteLattice const& L, Element x);

  JiPoset join_irreducibles(FiniteLattice const& L);

  // Length of the longest chain from bottom to top.
  std::size_t height(FiniteLattice const& L);

  // Down-sets of P as sorted element lists, in a fixed order starting with
  // the empty set. Throws TooLarge past `limit` down-sets.
  std::vector<ElementSet> down_sets(Poset const&  P,
                                    std::size_t   limit = std::size_t(1) << 20);

  struct DownsetLattice {
    FiniteLattice           lattice;
    std::vector<ElementSet> members;  // members[x] is the down-set for x
  };

  DownsetLattice downset_lattice(Poset const& P);

  // Order-isomorphism A -> B, if one exists.
  std::optional<std::vector<Element>> find_isomorphism(FiniteLattice const& A,
                                                       FiniteLattice const& B);

  inline bool is_isomorphic(FiniteLattice const& A, FiniteLattice const& B) {
    return find_isomorphism(A, B).has_value();
  }

  // Cheap isomorphism invariant, suitable for bucketing.
  std::vector<std::uint64_t> invariant_signature(FiniteLattice const& L);

  ElementSet to_set(std::vector<Element> v);

}  // namespace latcon
