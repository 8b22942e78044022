#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

/// Raised when a computation would exceed its memory or enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultDpMemoryBudget = std::size_t{1} << 30;  // 1 GiB

/// Set of all sums of exactly `count` distinct points of `base`.
///
/// Layered reachability over a dense box: layer c is a bit array over the
/// translated box [0, count*(max-min)]^n and bit x of layer c means "some
/// c-subset of the points seen so far sums to x + c*min". Adding a point is
/// a shifted OR from layer c-1 into layer c, walking c downwards so each
/// point is used at most once. The box extent already bounds every
/// reachable partial sum, so a shift never carries a cell into the next
/// row. The linear index puts the first coordinate most significant, so
/// reading the final layer in bit order yields canonical point order.
///
/// Requires 0 <= count <= |base|. Throws BudgetExceeded if the layers
/// would need more than `memory_budget` bytes.
PointConfiguration exact_count_subset_sums(const PointConfiguration& base, std::size_t count,
                                           std::size_t memory_budget = kDefaultDpMemoryBudget);

/// Bytes the DP above would allocate for this input.
std::size_t subset_sum_dp_bytes(const PointConfiguration& base, std::size_t count);

}  // namespace wedgepow
