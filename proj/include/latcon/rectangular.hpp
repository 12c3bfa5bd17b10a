#pragma once

// Planar rectangular lattices: boundary chains, corners, eyes, cells,
// gluing and triple gluing.

#include <string>
#include <utility>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/core.hpp"

namespace latcon {

  // Chains are listed bottom-up.
  struct RectLattice {
    FiniteLattice        lattice;
    Element              lc = 0;
    Element              rc = 0;
    std::vector<Element> lower_left;   // 0 .. lc
    std::vector<Element> upper_left;   // lc .. 1
    std::vector<Element> lower_right;  // 0 .. rc
    std::vector<Element> upper_right;  // rc .. 1
    ElementSet           eyes;

    [[nodiscard]] std::size_t bl() const noexcept {
      return lower_left.size();
    }
    [[nodiscard]] std::size_t br() const noexcept {
      return lower_right.size();
    }
    [[nodiscard]] std::size_t tl() const noexcept {
      return upper_left.size();
    }
    [[nodiscard]] std::size_t tr() const noexcept {
      return upper_right.size();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return lattice.size();
    }
  };

  // Consecutive pairs of a chain, bottom-up.
  std::vector<Cover> chain_edges(std::vector<Element> const& chain);

  // Throws NotSemimodular, NoCorner, AmbiguousCorner, CornersNotComplementary
  // or BoundaryNotChain.
  RectLattice make_rectangular(FiniteLattice L);

  // C_m x C_n; element (i, k) has id i * n + k, i grows to the upper left.
  // Throws SizeTooSmall unless m, n >= 2.
  RectLattice grid(std::size_t m, std::size_t n);

  // The seven-element slim rectangular lattice: 0, x, y, l, m, r, 1 with
  // ids 0..6.
  RectLattice s7();

  RectLattice m3_rect();

  struct Cell {
    Element              bottom;
    Element              top;
    Element              left;
    Element              right;
    std::vector<Element> middles;

    friend bool operator==(Cell const&, Cell const&) = default;
  };

  // Ordered by bottom, then left to right.
  std::vector<Cell> cells(RectLattice const& R);

  // New element bottom < e < top, placed right of the leftmost middle (or
  // right of `left` if the cell has none). Its id is R.size(). Throws
  // NotACell.
  RectLattice insert_eye(RectLattice const& R, Cell const& cell);

  // Replace the cell by a fork: a new element below the cell top between
  // left and right, and new elements subdividing the lower-left and
  // lower-right chains of the down-going trajectories. Fails with
  // NotSemimodular or similar if the lattice is not slim enough for it.
  RectLattice add_fork(RectLattice const& R, Cell const& cell);

  // Throws NotSemimodular for duals that leave the class (e.g. of S7).
  RectLattice dual(RectLattice const& R);

  enum class GlueSide {
    filter_left,   // the upper lattice sits to the upper left of the lower one
    filter_right,  // ... to the upper right
  };

  struct Gluing {
    FiniteLattice        lattice;
    std::vector<Element> lower_embedding;  // ids of the lower lattice
    std::vector<Element> upper_embedding;  // ids of the upper lattice
    ElementSet           lower_part;       // image of the lower lattice
    ElementSet           upper_part;       // image of the upper lattice
  };

  // Identify filter[i] of `lower` with ideal[i] of `upper`. The lower lattice
  // becomes an ideal, the upper one a filter of the result. Lower ids are
  // kept; the unshared elements of `upper` follow in id order. Throws
  // NotAFilter, NotAnIdeal or NotIsomorphic.
  Gluing glue(FiniteLattice const&        lower,
              std::vector<Element> const& filter,
              FiniteLattice const&        upper,
              std::vector<Element> const& ideal,
              GlueSide                    side = GlueSide::filter_right);

  // Congruence of the glued lattice restricting to the two given ones
  // (alpha_lower in ids of the lower lattice, alpha_upper in ids of the
  // upper). Throws Incompatible if they disagree on the overlap.
  Congruence glue_congruence_pair(Gluing const&     g,
                                  Congruence const& alpha_lower,
                                  Congruence const& alpha_upper);

  struct TripleGluing {
    RectLattice          result;
    RectLattice          top;
    RectLattice          bottom;
    RectLattice          left_flap;
    RectLattice          right_flap;
    std::vector<Element> top_embedding;
    std::vector<Element> bottom_embedding;
    std::vector<Element> left_embedding;
    std::vector<Element> right_embedding;
    Element              c = 0;  // 1 of the bottom = 0 of the top

    // Intermediate gluings: bottom with left flap, right flap with top, and
    // the two halves.
    Gluing lower_half;
    Gluing upper_half;
    Gluing whole;
  };

  // Facing chains: left_flap.upper_right with top.lower_left,
  // left_flap.lower_right with bottom.upper_left, right_flap.upper_left with
  // top.lower_right, right_flap.lower_left with bottom.upper_right. Throws
  // BoundaryMismatch.
  TripleGluing triple_glue(RectLattice const& top,
                           RectLattice const& left_flap,
                           RectLattice const& right_flap,
                           RectLattice const& bottom);

  // The congruence of the triple gluing restricting to the four given ones.
  // Throws Incompatible naming the first facing pair that disagrees.
  Congruence triple_glue_congruence(TripleGluing const& t,
                                    Congruence const&   alpha_top,
                                    Congruence const&   alpha_left,
                                    Congruence const&   alpha_right,
                                    Congruence const&   alpha_bottom);

  // Grid coordinates (index of x ^ lc in lower_left, index of x ^ rc in
  // lower_right). For non-eyes of a rectangular lattice x is the join of
  // the two components.
  std::pair<std::size_t, std::size_t> coordinates(RectLattice const& R, Element x);

  // In an eye-free grid flap, the cell where row `row` (the edges
  // lower_left[row]..lower_left[row+1] and their translates) crosses column
  // `column`. Throws FlapNotPlainGrid or IndexOutOfRange.
  Cell crossing_cell(RectLattice const& flap, std::size_t row, std::size_t column);

}  // namespace latcon
