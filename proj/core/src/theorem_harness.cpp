#include "wedgepow/theorem_harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <stdexcept>
#include <thread>

#include "wedgepow/convexity.hpp"
#include "wedgepow/polytope.hpp"
#include "wedgepow/subset_sum_dp.hpp"
#include "wedgepow/unimodular.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow {

namespace {

std::vector<LatticePoint> grid_points(const GridSpec& grid) {
  std::vector<LatticePoint> pts;
  for (std::int64_t x = 0; x <= grid.width; ++x)
    for (std::int64_t y = 0; y <= grid.height; ++y) pts.push_back({x, y});
  return pts;
}

// Calls visit(subset) for every lattice-convex nonempty subset of the grid.
template <typename Visit>
void for_each_lattice_convex_subset(const GridSpec& grid, bool touching_axes_only, Visit visit) {
  grid.validate();
  const auto pts = grid_points(grid);
  const std::size_t m = pts.size();
  std::vector<LatticePoint> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    subset.clear();
    bool touches_x = false, touches_y = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        subset.push_back(pts[i]);
        touches_x |= pts[i][0] == 0;
        touches_y |= pts[i][1] == 0;
      }
    }
    if (touching_axes_only && !(touches_x && touches_y)) continue;
    PointConfiguration s(2, subset);
    if (lattice_points_of_polytope(convex_hull(s)).size() == s.size()) visit(std::move(s));
  }
}

struct ConfigOutcome {
  std::optional<std::int64_t> exception_k;
  std::vector<Violation> violations;
  std::size_t p_good_checks = 0;
  std::size_t union_checks = 0;
};

ConfigOutcome examine(const PointConfiguration& s) {
  ConfigOutcome out;
  const auto report = verify_polygon(s);
  out.exception_k = report.exception_k;
  if (report.verdict == Verdict::violates) {
    const auto bad = report.deviations();
    out.violations.push_back({s, "theorem", bad.empty() ? -1 : bad.front()});
  }
  const auto n = static_cast<std::int64_t>(s.size());
  for (std::int64_t p = 1; n >= 4 && p <= n / 2; ++p) {
    const auto witness = is_p_good(s, p);
    if (n >= 5) {
      ++out.p_good_checks;
      if (!witness) out.violations.push_back({s, "p-good", p});
    }
    if (witness) {
      ++out.union_checks;
      if (!union_decomposition_holds(s, p)) out.violations.push_back({s, "union-decomposition", p});
    }
  }
  if (report.exception_k == 1 && is_p_good(s, 2)) {
    out.violations.push_back({s, "exception-2-good", 2});
  }
  return out;
}

}  // namespace

std::size_t GridSpec::point_count() const {
  return static_cast<std::size_t>((width + 1) * (height + 1));
}

void GridSpec::validate() const {
  if (width < 0 || height < 0) throw std::invalid_argument("grid sides must be nonnegative");
  if (width >= 25 || height >= 25 || point_count() > kMaxGridPoints) {
    throw BudgetExceeded("grid [0," + std::to_string(width) + "]x[0," + std::to_string(height) +
                         "] exceeds the exhaustive enumeration budget of " +
                         std::to_string(kMaxGridPoints) + " points");
  }
}

std::vector<PointConfiguration> enumerate_lattice_convex(const GridSpec& grid) {
  std::vector<PointConfiguration> out;
  for_each_lattice_convex_subset(grid, true, [&](PointConfiguration s) { out.push_back(std::move(s)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_lattice_convex_subsets(const GridSpec& grid) {
  std::size_t count = 0;
  for_each_lattice_convex_subset(grid, false, [&](const PointConfiguration&) { ++count; });
  return count;
}

std::vector<std::int64_t> TheoremReport::nonconvex_powers() const {
  std::vector<std::int64_t> out;
  for (const auto& r : per_p)
    if (!r.convex) out.push_back(r.p);
  return out;
}

std::vector<std::int64_t> TheoremReport::deviations() const {
  const auto actual = nonconvex_powers();
  std::vector<std::int64_t> out;
  std::set_symmetric_difference(actual.begin(), actual.end(), expected_nonconvex.begin(),
                                expected_nonconvex.end(), std::back_inserter(out));
  return out;
}

TheoremReport verify_polygon(const PointConfiguration& s) {
  if (s.dim() != 2) throw std::invalid_argument("verify_polygon needs a planar configuration");
  if (s.empty()) throw std::invalid_argument("verify_polygon needs a nonempty configuration");
  if (!check_lattice_convex(s).convex) {
    throw std::invalid_argument("configuration is not the lattice point set of a polygon");
  }
  TheoremReport report;
  report.base = s;
  report.n_points = s.size();
  report.exception_k = exception_index(s);
  const auto n = static_cast<std::int64_t>(s.size());
  for (std::int64_t p = 0; p <= n; ++p) {
    auto check = check_lattice_convex(wedge_power(s, p));
    report.per_p.push_back({p, check.convex, std::move(check.missing)});
  }

  auto& expected = report.expected_nonconvex;
  if (report.exception_k) {
    for (std::int64_t p : {std::int64_t{2}, n - 2})
      if (p >= 0 && p <= n) expected.push_back(p);
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  }
  report.verdict = report.deviations().empty() ? Verdict::conforms : Verdict::violates;
  return report;
}

PointConfiguration p_good_intersection(const PointConfiguration& s, std::int64_t p) {
  const auto n = static_cast<std::int64_t>(s.size());
  if (n < 2 || p < 1 || p > n - 1) {
    throw std::invalid_argument("p-goodness needs |S| >= 2 and 1 <= p <= |S| - 1");
  }
  std::optional<PointConfiguration> common;
  for (const auto& v : vertex_set(s)) {
    auto w = wedge_power(s.without(v), p);
    common = common ? set_intersection(*common, w) : std::move(w);
    if (common->empty()) break;
  }
  return *common;
}

std::optional<LatticePoint> is_p_good(const PointConfiguration& s, std::int64_t p) {
  const auto common = p_good_intersection(s, p);
  if (common.empty()) return std::nullopt;
  return common[0];
}

bool union_decomposition_holds(const PointConfiguration& s, std::int64_t p) {
  const auto n = static_cast<std::int64_t>(s.size());
  if (p < 1 || p > n) throw std::invalid_argument("union decomposition needs 1 <= p <= |S|");
  const auto targets = lattice_points_of_polytope(convex_hull(wedge_power(s, p)));
  std::vector<Polytope> pieces;
  for (const auto& v : vertex_set(s)) {
    const auto w = wedge_power(s.without(v), p);
    if (!w.empty()) pieces.push_back(convex_hull(w));
  }
  return std::all_of(targets.begin(), targets.end(), [&](const LatticePoint& q) {
    return std::any_of(pieces.begin(), pieces.end(),
                       [&](const Polytope& piece) { return piece.contains(q); });
  });
}

GridSummary verify_grid(const GridSpec& grid, unsigned jobs) {
  const auto configs = enumerate_lattice_convex(grid);
  std::vector<ConfigOutcome> outcomes(configs.size());

  std::vector<std::exception_ptr> failures(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        outcomes[i] = examine(configs[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  GridSummary summary;
  summary.grid = grid;
  summary.configs = configs.size();
  for (auto& o : outcomes) {
    if (o.exception_k) ++summary.exceptions_seen[*o.exception_k];
    summary.p_good_checks += o.p_good_checks;
    summary.union_checks += o.union_checks;
    for (auto& v : o.violations) summary.violations.push_back(std::move(v));
  }
  return summary;
}

}  // namespace wedgepow
