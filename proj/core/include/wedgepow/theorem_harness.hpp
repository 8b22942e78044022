#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

/// The grid [0,width] x [0,height].
struct GridSpec {
  std::int64_t width = 0;
  std::int64_t height = 0;

  std::size_t point_count() const;
  /// Throws BudgetExceeded above kMaxGridPoints grid points and
  /// std::invalid_argument for negative sides.
  void validate() const;
};

inline constexpr std::size_t kMaxGridPoints = 25;

/// Every nonempty lattice-convex subset of the grid, one representative per
/// translation class (the one touching both axes), canonically sorted.
std::vector<PointConfiguration> enumerate_lattice_convex(const GridSpec& grid);

/// Number of lattice-convex nonempty subsets of the grid without any
/// translation dedupe.
std::size_t count_lattice_convex_subsets(const GridSpec& grid);

enum class Verdict { conforms, violates };

struct PerPowerResult {
  std::int64_t p = 0;
  bool convex = true;
  PointConfiguration missing;
};

struct TheoremReport {
  PointConfiguration base;
  std::size_t n_points = 0;
  std::optional<std::int64_t> exception_k;
  std::vector<PerPowerResult> per_p;
  /// {2, N-2} clipped to [0, N] for exceptional triangles, else empty.
  std::vector<std::int64_t> expected_nonconvex;
  Verdict verdict = Verdict::conforms;

  /// The p values where the wedge power failed to be lattice-convex.
  std::vector<std::int64_t> nonconvex_powers() const;
  /// p values whose outcome differs from the expected pattern.
  std::vector<std::int64_t> deviations() const;
};

/// Checks lattice-convexity of every wedge power 0 <= p <= N of a planar
/// lattice-convex configuration and classifies the outcome: non-exceptional
/// inputs must be convex everywhere, an exceptional triangle must fail at
/// exactly p in {2, N-2}. Throws std::invalid_argument if s is not the
/// lattice point set of a polygon.
TheoremReport verify_polygon(const PointConfiguration& s);

/// Intersection over vertices v of wedge^p (S \ {v}).
PointConfiguration p_good_intersection(const PointConfiguration& s, std::int64_t p);

/// Some point of p_good_intersection (the canonically smallest), if any.
/// Requires |S| >= 2 and 1 <= p <= |S| - 1.
std::optional<LatticePoint> is_p_good(const PointConfiguration& s, std::int64_t p);

/// True iff every lattice point of conv(wedge^p S) lies in
/// conv(wedge^p (S \ {v})) for at least one vertex v. Requires 1 <= p <= |S|.
bool union_decomposition_holds(const PointConfiguration& s, std::int64_t p);

struct Violation {
  PointConfiguration config;
  std::string check;  // "theorem", "p-good", "union-decomposition", "exception-2-good"
  std::int64_t p = 0;
};

struct GridSummary {
  GridSpec grid;
  std::size_t configs = 0;
  std::vector<Violation> violations;
  std::map<std::int64_t, std::size_t> exceptions_seen;  // k -> count
  std::size_t p_good_checks = 0;
  std::size_t union_checks = 0;
};

/// verify_polygon over every enumerated configuration, plus the p-good and
/// union-decomposition lemmas wherever they apply. The result does not
/// depend on `jobs`.
GridSummary verify_grid(const GridSpec& grid, unsigned jobs = 1);

}  // namespace wedgepow
