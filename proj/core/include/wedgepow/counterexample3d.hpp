#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"
#include "wedgepow/subset_sum_dp.hpp"
#include "wedgepow/unimodular.hpp"

namespace wedgepow {

/// m -> <coeffs, m>, with integer coefficients not all zero.
class LinearFunctional {
 public:
  explicit LinearFunctional(const LatticePoint& coeffs);
  const LatticePoint& coeffs() const { return coeffs_; }
  std::int64_t operator()(const LatticePoint& m) const { return coeffs_.dot(m); }

 private:
  LatticePoint coeffs_;
};

/// The 84 lattice points of 6 * (standard 3-simplex), split by the plane
/// 5x + 4y + 7z = 25 into blue (below), red (on) and olive (above).
struct ColoredSimplex {
  static constexpr std::int64_t kScale = 6;
  static constexpr std::int64_t kLevel = 25;
  static constexpr std::size_t kWedgeOrder = 42;

  PointConfiguration points{3};
  LinearFunctional functional{LatticePoint{5, 4, 7}};
  std::int64_t level = kLevel;
  PointConfiguration blue{3};
  PointConfiguration olive{3};
  PointConfiguration red{3};
  /// P1..P4 in their conventional order; P1 + P2 + P4 = 3 P3.
  std::array<LatticePoint, 4> named_red;
};

/// Builds the colored simplex. The separating functional is recomputed from
/// the plane through P1, P2, P4; any broken invariant throws std::logic_error.
ColoredSimplex build_colored_simplex();

/// Sum of the blue points plus 2 * P3.
LatticePoint witness_point(const ColoredSimplex& cs);

struct CounterexampleReport {
  std::array<std::size_t, 3> counts{};  // blue, olive, red
  bool red_relation_holds = false;      // P1 + P2 + P4 == 3 P3
  LatticePoint witness;
  std::int64_t witness_level = 0;
  std::size_t wedge_size = 0;
  std::uint64_t wedge_digest = 0;
  bool witness_in_wedge = true;
  bool combination_points_in_wedge = false;
  bool witness_in_hull = false;
  std::size_t slice_size = 0;
  bool slice_matches = false;
  std::int64_t min_level_attained = 0;

  /// All assertions of the counterexample hold.
  bool holds() const;
};

/// Computes wedge^42 of the 84 points with the subset-sum DP and checks:
/// the witness is missing from it, it is the average of three members,
/// the minimal-level slice is (sum of blue) + wedge^2(red) and the minimum
/// level equals the witness level.
CounterexampleReport verify_counterexample(const ColoredSimplex& cs,
                                           std::size_t memory_budget = kDefaultDpMemoryBudget);

/// {m in N^n : f(m) <= c}; every coefficient of f must be positive.
PointConfiguration quadrant_points_below(const LinearFunctional& f, std::int64_t c);

/// Linear unimodular map U with f(U e1) = gcd(f) and f(U e2) = f(U e3) = 0,
/// so U e2, U e3 form a basis of the lattice {v in Z^3 : f(v) = 0}.
AffineUnimodularMap kernel_frame(const LinearFunctional& f);

/// Red points in lattice coordinates of their plane, taking P3 as origin.
PointConfiguration red_plane_coordinates(const ColoredSimplex& cs);

/// FNV-1a digest over the coordinates, in canonical order.
std::uint64_t configuration_digest(const PointConfiguration& s);

}  // namespace wedgepow
