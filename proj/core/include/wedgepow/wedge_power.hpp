#pragma once

#include <cstdint>
#include <string_view>

#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"
#include "wedgepow/subset_sum_dp.hpp"

namespace wedgepow {

enum class WedgeMethod { dp, naive };

WedgeMethod parse_wedge_method(std::string_view name);
std::string_view to_string(WedgeMethod m);

/// The naive method refuses inputs with more subsets than this.
inline constexpr std::uint64_t kNaiveSubsetBudget = 10'000'000;

struct WedgeQuery {
  PointConfiguration base;
  std::int64_t p = 0;
};

struct WedgeResult {
  PointConfiguration points;
  bool in_range = true;  // false when p < 0 or p > |base|; points is then empty
};

/// All sums of p distinct points of the base. Both methods return the same
/// canonical set; `naive` enumerates subsets and throws BudgetExceeded
/// above kNaiveSubsetBudget.
WedgeResult wedge_power(const WedgeQuery& query, WedgeMethod method = WedgeMethod::dp);

/// Convenience overload returning just the set.
PointConfiguration wedge_power(const PointConfiguration& base, std::int64_t p,
                               WedgeMethod method = WedgeMethod::dp);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Sum u0 of all base points; the pivot of the complement identity
/// wedge^(N-p) S = u0 - wedge^p S.
struct ComplementPivot {
  LatticePoint u0;
  static ComplementPivot of(const PointConfiguration& s) { return {s.sum()}; }
};

/// { u0 - m : m in wedge^p S }, which equals wedge^(N-p) S.
PointConfiguration reflect_complement(const PointConfiguration& s, std::int64_t p,
                                      WedgeMethod method = WedgeMethod::dp);

}  // namespace wedgepow
