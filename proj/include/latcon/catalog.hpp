#pragma once

// Named test lattices and an exhaustive generator of small rectangular
// lattices.

#include <cstdint>
#include <string>
#include <vector>

#include "latcon/rectangular.hpp"

namespace latcon {

  struct CatalogEntry {
    std::string   name;
    FiniteLattice lattice;
  };

  // S7 with an eye in its lower cell.
  RectLattice s7_eye();

  // Built-in names: s7, m3, s7+eye, grid:MxN.
  RectLattice named_lattice(std::string const& name);

  // Rectangular lattices of moderate size plus two non-semimodular ones.
  std::vector<CatalogEntry> default_catalog();

  struct SearchResult {
    std::vector<RectLattice> lattices;  // pairwise non-isomorphic
    std::size_t              rejected = 0;  // fork attempts the validator refused
  };

  // Every lattice reachable from a grid with at most max_size elements by
  // adding forks (to lattices without eyes) and then eyes, keeping only
  // results with at most max_size elements. The seed permutes the order in
  // which candidates are expanded; the result does not depend on it.
  SearchResult rectangular_search(std::size_t max_size, std::uint64_t seed = 0);

}  // namespace latcon
