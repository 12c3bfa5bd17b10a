#pragma once

// Static diagrams. Rectangular lattices are drawn on their grid: element x
// sits at (k - i, i + k) where i, k are the positions of x ^ lc and x ^ rc
// on the lower chains, so boundary-parallel edges run at 45 degrees; eyes
// are spread between the sides of their cell. Other lattices are drawn in
// layers by height.

#include <string>
#include <vector>

#include "latcon/rectangular.hpp"

namespace latcon {

  struct Point {
    double x;
    double y;
  };

  struct Layout {
    std::vector<Point> position;
    std::vector<Cover> edges;
    std::vector<bool>  steep;  // per edge; normal edges run at 45 degrees
  };

  Layout layout(RectLattice const& R);
  Layout layout(FiniteLattice const& L);

  std::string render_svg(FiniteLattice const& L, Layout const& lay);
  std::string render_dot(FiniteLattice const& L, Layout const& lay);

}  // namespace latcon
