#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

/// Nonnegative rational weight num/den attached to one point.
struct RationalWeight {
  LatticePoint point;
  std::int64_t num;
  std::int64_t den;
};

/// Writes q as an exact convex combination of points of s, if possible.
///
/// Solves the phase-one simplex problem  sum w_i s_i = q, sum w_i = 1,
/// w >= 0  over the rationals (Bland's rule, so it always terminates).
/// Only points with nonzero weight are returned; there are at most dim+1.
std::optional<std::vector<RationalWeight>> convex_combination(const PointConfiguration& s,
                                                              const LatticePoint& q);

/// q in conv(s), decided exactly. Works in every dimension.
bool point_in_hull(const PointConfiguration& s, const LatticePoint& q);

}  // namespace wedgepow
