#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

/// Convex hull of a nonempty finite lattice point set.
///
/// In the plane the vertices are stored counterclockwise starting from the
/// lexicographically smallest vertex, with no three collinear. In dimension
/// 3 the vertices are an unordered (canonically sorted) extreme-point cloud
/// and membership goes through the exact LP of hull_membership.hpp.
class Polytope {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  std::span<const LatticePoint> vertices() const { return vertices_; }

  /// Exact closed-hull membership.
  bool contains(const LatticePoint& q) const;

 private:
  friend Polytope convex_hull(const PointConfiguration& s);

  std::size_t ambient_dim_ = 0;
  int intrinsic_dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

/// Hull of a planar configuration (monotone chain, exact orientation tests).
/// Throws std::invalid_argument on an empty input or a non-planar one.
Polytope convex_hull_2d(const PointConfiguration& s);

/// Dimension-generic entry point: 1D range, 2D monotone chain, 3D extreme
/// point filter.
Polytope convex_hull(const PointConfiguration& s);

/// All integer points in the closed polytope. Ambient dimension <= 2 only.
PointConfiguration lattice_points_of_polytope(const Polytope& p);

/// Extreme points of conv(s).
PointConfiguration vertex_set(const PointConfiguration& s);

/// s \ {v}; throws std::invalid_argument unless v is a vertex of conv(s).
PointConfiguration remove_vertex(const PointConfiguration& s, const LatticePoint& v);

/// Affine dimension of the points (-1 for the empty set).
int affine_rank(const PointConfiguration& s);

}  // namespace wedgepow
