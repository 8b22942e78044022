#pragma once

#include <cstddef>

#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

/// Outcome of a lattice-convexity check. convex <=> missing is empty.
struct ConvexityReport {
  bool convex = true;
  PointConfiguration missing;  // lattice points of conv(S) absent from S
  std::size_t cardinality = 0;  // |S|
};

/// Decides whether S equals the set of lattice points of conv(S).
/// Dimension <= 2 only; three-dimensional inputs are refuted through an
/// explicit witness instead (see counterexample3d.hpp).
ConvexityReport check_lattice_convex(const PointConfiguration& s);

}  // namespace wedgepow
