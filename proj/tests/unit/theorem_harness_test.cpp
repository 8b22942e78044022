#include <gtest/gtest.h>

#include <random>

#include "wedgepow/convexity.hpp"
#include "wedgepow/polytope.hpp"
#include "wedgepow/subset_sum_dp.hpp"
#include "wedgepow/theorem_harness.hpp"
#include "wedgepow/unimodular.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow {
namespace {

const PointConfiguration kE1{{0, 1}, {1, 0}, {-1, -1}, {0, 0}};

std::vector<std::int64_t> ints(std::initializer_list<std::int64_t> v) { return v; }

TEST(EnumerateLatticeConvex, Counts) {
  EXPECT_EQ(enumerate_lattice_convex({0, 0}).size(), 1u);
  EXPECT_EQ(enumerate_lattice_convex({1, 1}).size(), 10u);
  EXPECT_EQ(count_lattice_convex_subsets({1, 1}), 15u);
  EXPECT_EQ(enumerate_lattice_convex({2, 2}).size(), 132u);
  EXPECT_EQ(enumerate_lattice_convex({3, 2}).size(), 420u);
}

TEST(EnumerateLatticeConvex, OutputIsConvexAndTouchesAxes) {
  for (const auto& s : enumerate_lattice_convex({3, 2})) {
    ASSERT_TRUE(check_lattice_convex(s).convex);
    EXPECT_EQ(s.min_corner(), (LatticePoint{0, 0}));
  }
}

TEST(GridSpec, RejectsBadSizes) {
  EXPECT_THROW((GridSpec{-1, 2}.validate()), std::invalid_argument);
  EXPECT_THROW((GridSpec{5, 5}.validate()), BudgetExceeded);
  EXPECT_NO_THROW((GridSpec{4, 4}.validate()));
  EXPECT_EQ((GridSpec{4, 4}.point_count()), 25u);
}

TEST(PGood, FivePointExample) {
  // The figure's coordinates put the corner at the origin.
  const PointConfiguration drawn{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}};
  EXPECT_TRUE(p_good_intersection(drawn, 2).contains({3, 0}));

  // Same polygon shifted one step left; the sum (0,0)+(1,0) plays the same role.
  const PointConfiguration shifted{{0, 0}, {-1, 0}, {-1, 1}, {1, 0}, {2, 0}};
  const auto common = p_good_intersection(shifted, 2);
  EXPECT_TRUE(common.contains({1, 0}));
  EXPECT_FALSE(common.contains({3, 0}));
  EXPECT_TRUE(is_p_good(shifted, 2).has_value());
}

TEST(PGood, E1IsNotTwoGood) {
  EXPECT_TRUE(p_good_intersection(kE1, 2).empty());
  EXPECT_FALSE(is_p_good(kE1, 2).has_value());
}

TEST(UnionDecomposition, Examples) {
  std::vector<LatticePoint> grid;
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y) grid.push_back({x, y});
  EXPECT_TRUE(union_decomposition_holds(PointConfiguration(2, grid), 2));
  EXPECT_FALSE(union_decomposition_holds(kE1, 2));
  EXPECT_TRUE(union_decomposition_holds(PointConfiguration{{0, 0}, {1, 0}, {2, 0}}, 1));
}

TEST(VerifyPolygon, E1FailsOnlyAtTwo) {
  const auto r = verify_polygon(kE1);
  EXPECT_EQ(r.exception_k, 1);
  EXPECT_EQ(r.nonconvex_powers(), ints({2}));
  EXPECT_EQ(r.expected_nonconvex, ints({2}));
  EXPECT_TRUE(r.deviations().empty());
  EXPECT_EQ(r.verdict, Verdict::conforms);
  EXPECT_EQ(r.per_p.size(), 5u);
  EXPECT_EQ(r.per_p[2].missing, PointConfiguration({LatticePoint{0, 0}}));
}

TEST(VerifyPolygon, E3FailsAtTwoAndFour) {
  const auto r = verify_polygon(exceptional_triangle(3));
  EXPECT_EQ(r.exception_k, 3);
  EXPECT_EQ(r.nonconvex_powers(), ints({2, 4}));
  EXPECT_EQ(r.verdict, Verdict::conforms);
}

TEST(VerifyPolygon, UnitSquareAllConvex) {
  const auto r = verify_polygon(PointConfiguration{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_FALSE(r.exception_k.has_value());
  EXPECT_TRUE(r.nonconvex_powers().empty());
  EXPECT_TRUE(r.expected_nonconvex.empty());
  EXPECT_EQ(r.verdict, Verdict::conforms);
}

TEST(VerifyPolygon, RejectsNonConvexInput) {
  EXPECT_THROW(verify_polygon(PointConfiguration{{0, 0}, {2, 0}}), std::invalid_argument);
}

TEST(VerifyPolygon, ConformsUnderUnimodularImages) {
  std::mt19937_64 rng(5);
  for (std::int64_t k = 1; k <= 5; ++k) {
    const auto base = exceptional_triangle(k);
    IntMatrix m{};
    m[0][0] = 2, m[0][1] = 1, m[1][0] = 1, m[1][1] = 1;
    const auto image = apply_map(AffineUnimodularMap(2, m, LatticePoint{3, -7}), base);
    const auto r = verify_polygon(image);
    EXPECT_EQ(r.exception_k, k);
    EXPECT_TRUE(r.deviations().empty());
  }
}

TEST(VerifyGrid, SmallGridsHaveNoViolations) {
  const auto g22 = verify_grid({2, 2});
  EXPECT_EQ(g22.configs, 132u);
  EXPECT_TRUE(g22.violations.empty());
  EXPECT_EQ(g22.exceptions_seen.at(1), 4u);

  const auto g32 = verify_grid({3, 2});
  EXPECT_EQ(g32.configs, 420u);
  EXPECT_TRUE(g32.violations.empty());
  EXPECT_EQ(g32.exceptions_seen.at(1), 8u);
  EXPECT_EQ(g32.exceptions_seen.at(2), 4u);
  EXPECT_EQ(g32.p_good_checks, 1072u);
  EXPECT_EQ(g32.union_checks, 1119u);
}

TEST(VerifyGrid, IndependentOfJobCount) {
  const auto a = verify_grid({3, 3}, 1);
  const auto b = verify_grid({3, 3}, 3);
  EXPECT_EQ(a.configs, b.configs);
  EXPECT_EQ(a.exceptions_seen, b.exceptions_seen);
  EXPECT_EQ(a.p_good_checks, b.p_good_checks);
  EXPECT_EQ(a.union_checks, b.union_checks);
  EXPECT_EQ(a.violations.size(), b.violations.size());
}

TEST(VerifyGrid, NestedPairsHaveNestedWedges) {
  const auto configs = enumerate_lattice_convex({2, 2});
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < configs.size(); i += 7) {
    for (std::size_t j = 0; j < configs.size(); ++j) {
      if (i == j || !configs[i].is_subset_of(configs[j])) continue;
      ++pairs;
      for (std::int64_t p = 0; p <= static_cast<std::int64_t>(configs[i].size()); ++p) {
        ASSERT_TRUE(wedge_power(configs[i], p).is_subset_of(wedge_power(configs[j], p)));
      }
    }
  }
  EXPECT_GT(pairs, 0u);
}

}  // namespace
}  // namespace wedgepow
