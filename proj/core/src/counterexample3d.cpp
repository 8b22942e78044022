#include "wedgepow/counterexample3d.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wedgepow/checked.hpp"
#include "wedgepow/hull_membership.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("colored simplex invariant failed: ") + what);
}

LatticePoint cross(const LatticePoint& u, const LatticePoint& w) {
  return {checked_sub(checked_mul(u[1], w[2]), checked_mul(u[2], w[1])),
          checked_sub(checked_mul(u[2], w[0]), checked_mul(u[0], w[2])),
          checked_sub(checked_mul(u[0], w[1]), checked_mul(u[1], w[0]))};
}

LatticePoint primitive(const LatticePoint& v) {
  std::int64_t g = 0;
  for (auto c : v.coords()) g = std::gcd(g, c);
  if (g == 0) return v;
  auto r = v;
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] /= g;
  return r;
}

}  // namespace

LinearFunctional::LinearFunctional(const LatticePoint& coeffs) : coeffs_(coeffs) {
  const auto c = coeffs.coords();
  if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) {
    throw std::invalid_argument("linear functional must have a nonzero coefficient");
  }
}

ColoredSimplex build_colored_simplex() {
  ColoredSimplex cs;
  cs.named_red = {LatticePoint{5, 0, 0}, LatticePoint{1, 5, 0}, LatticePoint{2, 2, 1},
                  LatticePoint{0, 1, 3}};
  const auto& [p1, p2, p3, p4] = cs.named_red;

  // Normal of the plane through P1, P2, P4, oriented to be positive on the axes.
  auto normal = primitive(cross(p2 - p1, p4 - p1));
  if (normal[0] < 0) normal = -normal;
  cs.functional = LinearFunctional(normal);
  cs.level = cs.functional(p1);
  require(normal == LatticePoint({5, 4, 7}), "separating functional is (5,4,7)");
  require(cs.level == ColoredSimplex::kLevel, "separating level is 25");

  std::vector<LatticePoint> all, blue, olive, red;
  for (std::int64_t x = 0; x <= ColoredSimplex::kScale; ++x)
    for (std::int64_t y = 0; x + y <= ColoredSimplex::kScale; ++y)
      for (std::int64_t z = 0; x + y + z <= ColoredSimplex::kScale; ++z) {
        const LatticePoint m{x, y, z};
        all.push_back(m);
        const auto v = cs.functional(m);
        (v < cs.level ? blue : v > cs.level ? olive : red).push_back(m);
      }
  cs.points = PointConfiguration(3, std::move(all));
  cs.blue = PointConfiguration(3, std::move(blue));
  cs.olive = PointConfiguration(3, std::move(olive));
  cs.red = PointConfiguration(3, std::move(red));

  require(cs.points.size() == 84, "84 lattice points");
  require(cs.blue.size() == 40, "40 blue points");
  require(cs.olive.size() == 40, "40 olive points");
  require(cs.red.size() == 4, "4 red points");
  require(cs.red == PointConfiguration(3, {p1, p2, p3, p4}), "red points are P1..P4");
  require(p1 + p2 + p4 == p3.scaled(3), "P1 + P2 + P4 = 3 P3");
  return cs;
}

LatticePoint witness_point(const ColoredSimplex& cs) {
  return cs.blue.sum() + cs.named_red[2].scaled(2);
}

bool CounterexampleReport::holds() const {
  return counts == std::array<std::size_t, 3>{40, 40, 4} && red_relation_holds &&
         !witness_in_wedge && combination_points_in_wedge && witness_in_hull && slice_size == 6 &&
         slice_matches && min_level_attained == witness_level;
}

CounterexampleReport verify_counterexample(const ColoredSimplex& cs, std::size_t memory_budget) {
  const auto& [p1, p2, p3, p4] = cs.named_red;
  CounterexampleReport r;
  r.counts = {cs.blue.size(), cs.olive.size(), cs.red.size()};
  r.red_relation_holds = p1 + p2 + p4 == p3.scaled(3);
  r.witness = witness_point(cs);
  r.witness_level = cs.functional(r.witness);

  const auto wedge = exact_count_subset_sums(cs.points, ColoredSimplex::kWedgeOrder, memory_budget);
  r.wedge_size = wedge.size();
  r.wedge_digest = configuration_digest(wedge);
  r.witness_in_wedge = wedge.contains(r.witness);

  // w is the average of three members: 40 blue points plus two distinct reds each.
  const auto blue_sum = cs.blue.sum();
  const PointConfiguration corners(3, {blue_sum + p1 + p2, blue_sum + p1 + p4, blue_sum + p2 + p4});
  r.combination_points_in_wedge = corners.size() == 3 && corners.is_subset_of(wedge);
  const bool average = corners[0] + corners[1] + corners[2] == r.witness.scaled(3);
  r.witness_in_hull = r.combination_points_in_wedge && average && point_in_hull(corners, r.witness);

  std::vector<LatticePoint> slice;
  r.min_level_attained = std::numeric_limits<std::int64_t>::max();
  for (const auto& m : wedge) {
    const auto v = cs.functional(m);
    r.min_level_attained = std::min(r.min_level_attained, v);
    if (v == r.witness_level) slice.push_back(m);
  }
  r.slice_size = slice.size();
  const auto red_pairs = wedge_power(cs.red, 2, WedgeMethod::naive).translated(blue_sum);
  r.slice_matches = PointConfiguration::from_sorted_unique(3, std::move(slice)) == red_pairs;
  return r;
}

PointConfiguration quadrant_points_below(const LinearFunctional& f, std::int64_t c) {
  const auto& coeffs = f.coeffs();
  for (auto a : coeffs.coords()) {
    if (a <= 0) throw std::invalid_argument("quadrant enumeration needs positive coefficients");
  }
  const std::size_t dim = coeffs.dim();
  std::vector<LatticePoint> out;
  auto m = LatticePoint::zero(dim);
  // Depth-first over coordinates with the remaining budget.
  auto walk = [&](auto&& self, std::size_t axis, std::int64_t budget) -> void {
    if (axis == dim) {
      out.push_back(m);
      return;
    }
    for (std::int64_t v = 0; checked_mul(v, coeffs[axis]) <= budget; ++v) {
      m[axis] = v;
      self(self, axis + 1, budget - v * coeffs[axis]);
    }
    m[axis] = 0;
  };
  if (c >= 0) walk(walk, 0, c);
  return PointConfiguration(dim, std::move(out));
}

AffineUnimodularMap kernel_frame(const LinearFunctional& f) {
  auto row = f.coeffs();
  if (row.dim() != 3) throw std::invalid_argument("kernel_frame expects a functional on Z^3");
  IntMatrix u{};
  for (std::size_t i = 0; i < 3; ++i) u[i][i] = 1;
  auto column_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    // column dst -= q * column src, mirrored on the row vector
    row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
    for (std::size_t i = 0; i < 3; ++i) u[i][dst] = checked_sub(u[i][dst], checked_mul(q, u[i][src]));
  };
  auto swap_columns = [&](std::size_t a, std::size_t b) {
    std::swap(row[a], row[b]);
    for (std::size_t i = 0; i < 3; ++i) std::swap(u[i][a], u[i][b]);
  };
  // Euclid across the row until only the first entry is nonzero.
  for (std::size_t j = 1; j < 3; ++j) {
    while (row[j] != 0) {
      column_op(0, j, row[0] / row[j]);
      swap_columns(0, j);
    }
  }
  return {3, u, LatticePoint::zero(3)};
}

PointConfiguration red_plane_coordinates(const ColoredSimplex& cs) {
  const auto to_frame = kernel_frame(cs.functional).inverse();
  const auto& origin = cs.named_red[2];
  std::vector<LatticePoint> coords;
  for (const auto& m : cs.red) {
    const auto c = to_frame.apply(m - origin);
    if (c[0] != 0) throw std::logic_error("red point off the separating plane");
    coords.push_back({c[1], c[2]});
  }
  return PointConfiguration(2, std::move(coords));
}

std::uint64_t configuration_digest(const PointConfiguration& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(s.dim());
  for (const auto& p : s)
    for (auto c : p.coords()) mix(static_cast<std::uint64_t>(c));
  return h;
}

}  // namespace wedgepow
