#include <gtest/gtest.h>

#include <algorithm>

#include "wedgepow/cornercut.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow {
namespace {

TEST(TruncatedQuadrant, Sizes) {
  EXPECT_EQ(truncated_quadrant(0).points.size(), 1u);
  EXPECT_EQ(truncated_quadrant(2).points.size(), 6u);
  EXPECT_EQ(truncated_quadrant(6).points.size(), 28u);
  EXPECT_THROW(truncated_quadrant(-1), std::invalid_argument);
}

TEST(CornerCut, SmallExamplesAreConvex) {
  EXPECT_TRUE(verify_corner_cut(2, 2).convex);
  EXPECT_TRUE(verify_corner_cut(3, 3).convex);
}

TEST(CornerCut, Preconditions) {
  EXPECT_THROW(verify_corner_cut(1, 1), std::invalid_argument);
  EXPECT_THROW(verify_corner_cut(-1, 3), std::invalid_argument);
  EXPECT_THROW(verify_corner_cut(7, 2), std::invalid_argument);
  EXPECT_NO_THROW(verify_corner_cut(6, 2));
}

TEST(CornerCut, KnownWedgeSizes) {
  const std::vector<std::tuple<std::int64_t, std::int64_t, std::size_t>> table{
      {2, 1, 6}, {2, 2, 12}, {2, 3, 13}, {3, 1, 10}, {3, 2, 25}, {3, 3, 40}};
  for (const auto& [b, d, size] : table) {
    EXPECT_EQ(verify_corner_cut(d, b).cardinality, size) << "B=" << b << " d=" << d;
  }
}

TEST(CornerCut, ConvexAcrossGrid) {
  for (std::int64_t b = 2; b <= 6; ++b) {
    const auto n = static_cast<std::int64_t>(truncated_quadrant(b).points.size());
    for (std::int64_t d = 0; d <= std::min<std::int64_t>(10, n); ++d) {
      EXPECT_TRUE(verify_corner_cut(d, b).convex) << "B=" << b << " d=" << d;
    }
  }
}

TEST(CornerCut, GrowsWithBound) {
  for (std::int64_t d = 1; d <= 5; ++d) {
    for (std::int64_t b = 3; b <= 5; ++b) {
      const auto small = wedge_power(truncated_quadrant(b).points, d);
      const auto large = wedge_power(truncated_quadrant(b + 1).points, d);
      EXPECT_TRUE(small.is_subset_of(large));
    }
  }
}

TEST(CornerCut, MinimumCoordinateSumMatchesGreedy) {
  for (std::int64_t b = 2; b <= 5; ++b) {
    const auto q = truncated_quadrant(b).points;
    std::vector<LatticePoint> pts(q.begin(), q.end());
    std::sort(pts.begin(), pts.end(), [](const auto& u, const auto& v) {
      return u[0] + u[1] < v[0] + v[1];
    });
    for (std::int64_t d = 1; d <= 8 && d <= static_cast<std::int64_t>(pts.size()); ++d) {
      std::int64_t greedy = 0;
      for (std::int64_t i = 0; i < d; ++i) greedy += pts[i][0] + pts[i][1];
      std::int64_t best = INT64_MAX;
      for (const auto& m : wedge_power(truncated_quadrant(b).points, d))
        best = std::min(best, m[0] + m[1]);
      EXPECT_EQ(best, greedy);
    }
  }
}

TEST(CornerCut, DpAgreesWithNaiveWhenAffordable) {
  for (std::int64_t b = 2; b <= 4; ++b) {
    const auto q = truncated_quadrant(b).points;
    for (std::int64_t d = 0; d <= static_cast<std::int64_t>(q.size()); ++d) {
      if (binomial(q.size(), d) > 200'000) continue;
      EXPECT_EQ(wedge_power(q, d, WedgeMethod::dp), wedge_power(q, d, WedgeMethod::naive));
    }
  }
}

}  // namespace
}  // namespace wedgepow
