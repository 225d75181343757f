#pragma once

#include <string>

#include "sidon/lattice.hpp"
#include "sidon/shapes.hpp"

namespace sidon {

/// Closed integer box [x_min, x_max] x [y_min, y_max]; empty when min > max.
struct Window {
  Int x_min = 0, x_max = -1, y_min = 0, y_max = -1;

  static Window square(Int lo, Int hi) { return Window{lo, hi, lo, hi}; }
  bool empty() const { return x_min > x_max || y_min > y_max; }
  bool contains(Int x, Int y) const { return x_min <= x && x <= x_max && y_min <= y && y <= y_max; }
};

// Draws every translate S + x (x in L) meeting the window as a <g> of unit
// squares, one square per point of the window it covers. Output bytes depend
// only on the arguments. Throws UnsupportedDimension unless n = 2.
std::string render_svg(const PointSet& shape, const Lattice& lattice, const Window& window);
std::string render_svg(const ShapeSpec& shape, const Lattice& lattice, const Window& window);

}  // namespace sidon
