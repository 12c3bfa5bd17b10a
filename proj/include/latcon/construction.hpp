#pragma once

// The representation pipelines: boundary color extension, filter and ideal
// representations of a bounded homomorphism Con F -> Con G, embedding into
// a simple rectangular lattice, and the upper-chain collapse test.

#include <string>
#include <utility>
#include <vector>

#include "latcon/birkhoff.hpp"
#include "latcon/congruence.hpp"
#include "latcon/rectangular.hpp"

namespace latcon {

  // One inserted eye. The cell is given in ids of the output lattice.
  // color_x is the congruence (index into Con of the lattice owning the
  // first edge) whose edge row was used, color_y the one joined to it.
  struct EyeRecord {
    std::string flap;  // "left", "right" or "bottom"
    Cell        cell;
    std::size_t color_x;
    std::size_t color_y;
  };

  // Boundary edges of the output carrying one join-irreducible congruence.
  struct ColorRow {
    std::size_t        congruence;  // index into Con output
    std::vector<Cover> lower_left;
    std::vector<Cover> lower_right;
    std::vector<Cover> upper_left;
    std::vector<Cover> upper_right;
  };

  struct ConstructionReport {
    RectLattice            output;
    std::vector<Element>   embedded_F;  // F id -> output id
    std::vector<Element>   embedded_G;  // G id -> output id (empty if none)
    std::vector<EyeRecord> eye_log;
    std::vector<ColorRow>  color_table;

    // Intermediate lattices, in order of construction: "extension" (the
    // boundary color extension used) and "glued" (the triple gluing before
    // any flap eye).
    std::vector<std::pair<std::string, RectLattice>> stages;
  };

  // Color table of any rectangular lattice.
  std::vector<ColorRow> color_table(RectLattice const& R);

  // A cp-extension R of F with F = up-set of 0_F and every join-irreducible
  // congruence on both upper and both lower chains of R. Throws
  // ColorMissingOnLowerBoundary if some color of F misses its lower chains.
  ConstructionReport boundary_color_extension(RectLattice const& F);

  // The extension used below the top in ideal representations: F is a
  // filter and every color appears on both lower chains. This is the
  // output of boundary_color_extension, which already has the property.
  ConstructionReport lower_boundary_color_extension(RectLattice const& F);

  // L with F convex, G a filter, restriction Con L -> Con F bijective and
  // phi(a|F) = a|G for all a in Con L. phi must run from
  // congruence_lattice(F).lattice() to congruence_lattice(G).lattice().
  ConstructionReport filter_representation(RectLattice const& F,
                                           RectLattice const& G,
                                           BoundedHom const&  phi);

  // As filter_representation with G an ideal of L. Throws ConditionIFails
  // if some nontrivial congruence of G collapses no upper-chain edge.
  ConstructionReport ideal_representation(RectLattice const& F,
                                          RectLattice const& G,
                                          BoundedHom const&  phi);

  // ideal_representation with F = M3 and the hom Con M3 -> Con G that sends
  // 0 to 0 and 1 to 1; the output is simple.
  ConstructionReport simple_ideal_embedding(RectLattice const& G);

  struct CollapseReport {
    bool                    holds;
    std::vector<Congruence> witnesses;  // atoms of Con G with no upper edge
    bool                    agrees;     // atom scan == full scan
  };

  CollapseReport upper_chain_collapse_check(RectLattice const& G);

}  // namespace latcon
