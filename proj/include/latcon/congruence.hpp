#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latcon/core.hpp"

namespace latcon {

  // An equivalence relation on 0..n-1 stored as one label per element; the
  // label of x is the least member of x's block. Whether the partition is a
  // congruence of some lattice is a separate question (is_congruence).
  class Congruence {
   public:
    Congruence() = default;

    // Arbitrary block labels; they are canonicalised.
    explicit Congruence(std::vector<Element> const& labels);

    // Throws NotAPartition unless the blocks partition 0..n-1.
    static Congruence from_blocks(std::size_t                    n,
                                  std::vector<ElementSet> const& blocks);

    static Congruence identity(std::size_t n);
    static Congruence all(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }

    [[nodiscard]] Element label(Element x) const {
      return _labels[x];
    }

    [[nodiscard]] bool same_block(Element x, Element y) const {
      return _labels[x] == _labels[y];
    }

    [[nodiscard]] std::vector<Element> const& labels() const noexcept {
      return _labels;
    }

    // Blocks sorted by least member, members ascending.
    [[nodiscard]] std::vector<ElementSet> blocks() const;

    [[nodiscard]] std::size_t number_of_blocks() const;

    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_all() const;

    // this <= other, i.e. every block of this lies inside a block of other.
    [[nodiscard]] bool refines(Congruence const& other) const;

    friend bool operator==(Congruence const&, Congruence const&) = default;
    friend auto operator<=>(Congruence const&, Congruence const&) = default;

   private:
    std::vector<Element> _labels;
  };

  // Nontrivial blocks, e.g. "{1,3}{2,5}"; "identity" if there are none.
  std::string format_blocks(Congruence const& alpha);

  struct CongruenceHash {
    std::size_t operator()(Congruence const& c) const noexcept;
  };

  bool is_congruence(FiniteLattice const& L, Congruence const& alpha);
  bool is_congruence(FiniteLattice const& L, std::vector<ElementSet> const& blocks);
  bool is_meet_congruence(FiniteLattice const& L, Congruence const& alpha);
  bool is_meet_congruence(FiniteLattice const&            L,
                          std::vector<ElementSet> const& blocks);

  // Smallest congruence collapsing a and b.
  Congruence principal_congruence(FiniteLattice const& L, Element a, Element b);

  // Smallest congruence containing every given pair.
  Congruence generated_congruence(FiniteLattice const&                     L,
                                  std::vector<std::pair<Element, Element>> pairs);

  Congruence congruence_join(Congruence const& a, Congruence const& b);
  Congruence congruence_meet(Congruence const& a, Congruence const& b);

  [[nodiscard]] inline bool collapses(Congruence const& alpha, Cover edge) {
    return alpha.same_block(edge.lower, edge.upper);
  }

  class ConLattice {
   public:
    ConLattice() = default;
    explicit ConLattice(FiniteLattice const& L);

    [[nodiscard]] std::size_t size() const noexcept {
      return _congruences.size();
    }

    // Ordered by number of blocks (descending) then labels; a linear
    // extension of refinement, so index 0 is the identity and the last
    // index is the all relation.
    [[nodiscard]] std::vector<Congruence> const& congruences() const noexcept {
      return _congruences;
    }

    [[nodiscard]] Congruence const& congruence(std::size_t i) const {
      return _congruences.at(i);
    }

    // The congruences ordered by refinement; element i is congruence i.
    [[nodiscard]] FiniteLattice const& lattice() const noexcept {
      return _lattice;
    }

    // Congruence indices of the join-irreducible congruences (the distinct
    // edge colors), ascending.
    [[nodiscard]] std::vector<std::size_t> const& ji() const noexcept {
      return _ji;
    }

    // Refinement order on ji(); poset element k is congruence ji()[k].
    [[nodiscard]] Poset const& ji_poset() const noexcept {
      return _ji_poset;
    }

    // Position in ji() of the color of a cover edge. Throws ElementOutOfRange
    // for non-edges.
    [[nodiscard]] std::size_t edge_color(Cover edge) const;

    // Congruence index of the color of a cover edge.
    [[nodiscard]] std::size_t edge_congruence(Cover edge) const {
      return _ji[edge_color(edge)];
    }

    [[nodiscard]] std::map<std::pair<Element, Element>, std::size_t> const&
    edge_colors() const noexcept {
      return _edge_color;
    }

    // For each congruence, the positions in ji() of the colors below it.
    [[nodiscard]] ElementSet const& down_set_of(std::size_t i) const {
      return _down_sets.at(i);
    }

    [[nodiscard]] std::optional<std::size_t> index_of(Congruence const& c) const;

    [[nodiscard]] std::size_t bottom_index() const noexcept {
      return 0;
    }

    [[nodiscard]] std::size_t top_index() const noexcept {
      return _congruences.size() - 1;
    }

    // Congruence indices of the atoms of Con L.
    [[nodiscard]] std::vector<std::size_t> atoms() const;

   private:
    std::vector<Congruence>                              _congruences;
    std::vector<ElementSet>                              _down_sets;
    FiniteLattice                                        _lattice;
    std::vector<std::size_t>                             _ji;
    Poset                                                _ji_poset;
    std::map<std::pair<Element, Element>, std::size_t>   _edge_color;
    std::unordered_map<Congruence, std::size_t, CongruenceHash> _index;
  };

  ConLattice congruence_lattice(FiniteLattice const& L);

  bool is_simple(FiniteLattice const& L);

  // Restriction to a convex sublattice S: element i of the result is S[i].
  // Throws NotConvexSublattice.
  Congruence restrict(FiniteLattice const& L,
                      Congruence const&    alpha,
                      ElementSet const&    S);

  // Pull back along an element map (e.g. an embedding K -> L): x ~ y iff
  // alpha collapses embedding[x] and embedding[y]. No checks.
  Congruence restrict_along(Congruence const&           alpha,
                            std::vector<Element> const& embedding);

  // restrict: Con L -> Con K is a bijection.
  bool is_cp_extension(FiniteLattice const& L, ElementSet const& K);

  // The congruence of L extending alpha (on the ideal I, element i = I[i]) by
  // singleton blocks outside I. The result need not be a congruence of L.
  // Throws NotAnIdeal.
  Congruence singleton_extension(FiniteLattice const& L,
                                 ElementSet const&    I,
                                 Congruence const&    alpha);

}  // namespace latcon
