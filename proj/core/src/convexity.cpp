#include "wedgepow/convexity.hpp"

#include <stdexcept>

#include "wedgepow/polytope.hpp"

namespace wedgepow {

ConvexityReport check_lattice_convex(const PointConfiguration& s) {
  if (s.dim() > 2) {
    throw std::invalid_argument(
        "lattice-convexity is only decided in dimension <= 2; use the witness-based "
        "counterexample3d check for dimension 3");
  }
  ConvexityReport report{true, PointConfiguration(s.dim()), s.size()};
  if (s.empty()) return report;
  report.missing = set_difference(lattice_points_of_polytope(convex_hull(s)), s);
  report.convex = report.missing.empty();
  return report;
}

}  // namespace wedgepow
