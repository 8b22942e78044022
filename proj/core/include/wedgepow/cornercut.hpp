#pragma once

#include <cstdint>

#include "wedgepow/convexity.hpp"
#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

/// Staircase truncation {(x,y) in N^2 : x + y <= bound} of the quadrant.
struct QuadrantTruncation {
  std::int64_t bound = 0;
  PointConfiguration points;
};

QuadrantTruncation truncated_quadrant(std::int64_t bound);

/// Lattice-convexity of wedge^d of the truncated quadrant. A convex result
/// certifies that every lattice point of conv(wedge^d T_B) is a sum of d
/// distinct points of N^2. Requires bound >= 2 and 0 <= d <= |T_B|.
ConvexityReport verify_corner_cut(std::int64_t d, std::int64_t bound);

}  // namespace wedgepow
