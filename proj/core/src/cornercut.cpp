#include "wedgepow/cornercut.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "wedgepow/wedge_power.hpp"

namespace wedgepow {

QuadrantTruncation truncated_quadrant(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("quadrant truncation bound must be >= 0");
  std::vector<LatticePoint> pts;
  for (std::int64_t x = 0; x <= bound; ++x)
    for (std::int64_t y = 0; x + y <= bound; ++y) pts.push_back({x, y});
  return {bound, PointConfiguration(2, std::move(pts))};
}

ConvexityReport verify_corner_cut(std::int64_t d, std::int64_t bound) {
  if (bound < 2) throw std::invalid_argument("corner cut check needs B >= 2");
  const auto quadrant = truncated_quadrant(bound);
  const auto n = static_cast<std::int64_t>(quadrant.points.size());
  if (d < 0 || d > n) {
    throw std::invalid_argument("corner cut check needs 0 <= d <= " + std::to_string(n));
  }
  return check_lattice_convex(wedge_power(quadrant.points, d));
}

}  // namespace wedgepow
