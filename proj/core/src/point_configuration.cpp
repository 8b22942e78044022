#include "wedgepow/point_configuration.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace wedgepow {

namespace {

void require_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw std::invalid_argument("configuration dimension must be 1..3, got " + std::to_string(dim));
  }
}

void require_points_dim(std::size_t dim, const std::vector<LatticePoint>& points) {
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw std::invalid_argument("point " + p.to_string() + " does not have dimension " +
                                  std::to_string(dim));
    }
  }
}

void require_same_dim(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("configuration dimension mismatch");
}

}  // namespace

PointConfiguration::PointConfiguration(std::size_t dim) : dim_(dim) { require_dim(dim); }

PointConfiguration::PointConfiguration(std::size_t dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
  require_dim(dim);
  require_points_dim(dim, points_);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointConfiguration::PointConfiguration(std::initializer_list<LatticePoint> points)
    : PointConfiguration(points.size() ? points.begin()->dim() : 2, std::vector(points)) {}

PointConfiguration PointConfiguration::from_distinct(std::size_t dim,
                                                     std::vector<LatticePoint> points) {
  require_dim(dim);
  require_points_dim(dim, points);
  std::sort(points.begin(), points.end());
  auto dup = std::adjacent_find(points.begin(), points.end());
  if (dup != points.end()) throw std::invalid_argument("duplicate point " + dup->to_string());
  return from_sorted_unique(dim, std::move(points));
}

PointConfiguration PointConfiguration::from_sorted_unique(std::size_t dim,
                                                          std::vector<LatticePoint> points) {
  PointConfiguration c(dim);
  c.points_ = std::move(points);
  return c;
}

bool PointConfiguration::contains(const LatticePoint& q) const {
  return std::binary_search(points_.begin(), points_.end(), q);
}

bool PointConfiguration::is_subset_of(const PointConfiguration& other) const {
  return dim_ == other.dim_ &&
         std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

LatticePoint PointConfiguration::sum() const {
  auto s = LatticePoint::zero(dim_);
  for (const auto& p : points_) s += p;
  return s;
}

PointConfiguration PointConfiguration::without(const LatticePoint& q) const {
  std::vector<LatticePoint> rest;
  rest.reserve(points_.size());
  std::copy_if(points_.begin(), points_.end(), std::back_inserter(rest),
               [&](const LatticePoint& p) { return p != q; });
  return from_sorted_unique(dim_, std::move(rest));
}

PointConfiguration PointConfiguration::translated(const LatticePoint& t) const {
  std::vector<LatticePoint> moved;
  moved.reserve(points_.size());
  for (const auto& p : points_) moved.push_back(p + t);
  // translation preserves lexicographic order
  return from_sorted_unique(dim_, std::move(moved));
}

LatticePoint PointConfiguration::min_corner() const {
  if (points_.empty()) throw std::invalid_argument("min_corner of empty configuration");
  LatticePoint m = points_.front();
  for (const auto& p : points_)
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::min(m[i], p[i]);
  return m;
}

LatticePoint PointConfiguration::max_corner() const {
  if (points_.empty()) throw std::invalid_argument("max_corner of empty configuration");
  LatticePoint m = points_.front();
  for (const auto& p : points_)
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], p[i]);
  return m;
}

PointConfiguration set_difference(const PointConfiguration& a, const PointConfiguration& b) {
  require_same_dim(a, b);
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointConfiguration::from_sorted_unique(a.dim(), std::move(out));
}

PointConfiguration set_intersection(const PointConfiguration& a, const PointConfiguration& b) {
  require_same_dim(a, b);
  std::vector<LatticePoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointConfiguration::from_sorted_unique(a.dim(), std::move(out));
}

}  // namespace wedgepow
