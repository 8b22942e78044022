#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "test_support.hpp"
#include "wedgepow/hull_membership.hpp"
#include "wedgepow/polytope.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow {
namespace {

TEST(PointInHull, RedPairSumsContainTwiceP3) {
  const PointConfiguration sums(3, {{6, 5, 0}, {7, 2, 1}, {5, 1, 3}, {3, 7, 1}, {1, 6, 3}, {2, 3, 4}});
  const LatticePoint q{4, 4, 2};
  const auto weights = convex_combination(sums, q);
  ASSERT_TRUE(weights);
  // Recombine exactly: sum w_i p_i == q and sum w_i == 1, over a common denominator.
  std::int64_t den = 1;
  for (const auto& w : *weights) den = std::lcm(den, w.den);
  auto acc = LatticePoint::zero(3);
  std::int64_t total = 0;
  for (const auto& w : *weights) {
    ASSERT_GT(w.num, 0);
    const auto scale = w.num * (den / w.den);
    acc += w.point.scaled(scale);
    total += scale;
  }
  EXPECT_EQ(total, den);
  EXPECT_EQ(acc, q.scaled(den));
}

TEST(PointInHull, MissingOriginOfE1Wedge) {
  const auto w = wedge_power(PointConfiguration{{0, 1}, {1, 0}, {-1, -1}, {0, 0}}, 2);
  EXPECT_FALSE(w.contains({0, 0}));
  EXPECT_TRUE(point_in_hull(w, {0, 0}));
}

TEST(PointInHull, OutsideBoundingBox) {
  const PointConfiguration s{{0, 0}, {2, 0}, {0, 2}};
  EXPECT_FALSE(point_in_hull(s, {3, 0}));
  EXPECT_FALSE(point_in_hull(s, {-1, -1}));
  EXPECT_FALSE(point_in_hull(s, {2, 2}));  // inside the box, outside the triangle
}

TEST(PointInHull, DegenerateInputs) {
  EXPECT_TRUE(point_in_hull(PointConfiguration{{1, 1}}, {1, 1}));
  EXPECT_FALSE(point_in_hull(PointConfiguration{{1, 1}}, {1, 2}));
  const PointConfiguration seg(3, {{0, 0, 0}, {4, 2, 2}});
  EXPECT_TRUE(point_in_hull(seg, {2, 1, 1}));
  EXPECT_FALSE(point_in_hull(seg, {2, 1, 0}));
  EXPECT_FALSE(point_in_hull(PointConfiguration(2), {0, 0}));
}

TEST(PointInHull, AgreesWithTriangleOracleIn2d) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = testing::random_configuration(rng, 2, 6, -4, 4);
    const auto hull_points = lattice_points_of_polytope(convex_hull_2d(s));
    for (std::int64_t x = -5; x <= 5; ++x) {
      for (std::int64_t y = -5; y <= 5; ++y) {
        const LatticePoint q{x, y};
        const bool lp = point_in_hull(s, q);
        ASSERT_EQ(lp, hull_points.contains(q)) << q;
        ASSERT_EQ(lp, testing::in_some_triangle(s, q)) << q;
      }
    }
  }
}

TEST(PointInHull, ThreeDimensionalSimplex) {
  const PointConfiguration simplex(3, {{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  EXPECT_TRUE(point_in_hull(simplex, {1, 1, 1}));
  EXPECT_TRUE(point_in_hull(simplex, {0, 1, 2}));
  EXPECT_FALSE(point_in_hull(simplex, {1, 1, 2}));
}

}  // namespace
}  // namespace wedgepow
