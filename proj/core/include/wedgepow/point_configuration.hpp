#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "wedgepow/lattice_point.hpp"

namespace wedgepow {

/// Finite set of lattice points of one dimension, kept sorted and
/// deduplicated so that equality is structural.
class PointConfiguration {
 public:
  using const_iterator = std::vector<LatticePoint>::const_iterator;

  explicit PointConfiguration(std::size_t dim = 2);
  /// Sorts and silently drops duplicates.
  PointConfiguration(std::size_t dim, std::vector<LatticePoint> points);
  PointConfiguration(std::initializer_list<LatticePoint> points);

  /// Like the constructor, but throws std::invalid_argument naming the first
  /// duplicate instead of dropping it.
  static PointConfiguration from_distinct(std::size_t dim, std::vector<LatticePoint> points);
  /// Caller guarantees the input is already sorted and duplicate-free.
  static PointConfiguration from_sorted_unique(std::size_t dim, std::vector<LatticePoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const LatticePoint> points() const { return points_; }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  const_iterator begin() const { return points_.begin(); }
  const_iterator end() const { return points_.end(); }

  bool contains(const LatticePoint& q) const;
  bool is_subset_of(const PointConfiguration& other) const;

  /// Sum of all points (the empty sum is the origin).
  LatticePoint sum() const;
  PointConfiguration without(const LatticePoint& q) const;
  PointConfiguration translated(const LatticePoint& t) const;

  /// Coordinate-wise bounds; configuration must be nonempty.
  LatticePoint min_corner() const;
  LatticePoint max_corner() const;

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
  friend auto operator<=>(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  std::size_t dim_;
  std::vector<LatticePoint> points_;
};

PointConfiguration set_difference(const PointConfiguration& a, const PointConfiguration& b);
PointConfiguration set_intersection(const PointConfiguration& a, const PointConfiguration& b);

}  // namespace wedgepow
