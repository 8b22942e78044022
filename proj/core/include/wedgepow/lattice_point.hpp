#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

namespace wedgepow {

inline constexpr std::size_t kMaxDim = 3;

/// Integer point of Z^n, n in {1,2,3}.
///
/// Stored inline (no heap) so large wedge powers stay cheap to hold. All
/// arithmetic is overflow-checked and throws ArithmeticOverflow instead of
/// wrapping. Points of equal dimension order lexicographically.
class LatticePoint {
 public:
  LatticePoint() = default;
  LatticePoint(std::initializer_list<std::int64_t> coords);
  explicit LatticePoint(std::span<const std::int64_t> coords);

  static LatticePoint zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return {coords_.data(), dim_}; }

  LatticePoint& operator+=(const LatticePoint& o);
  LatticePoint& operator-=(const LatticePoint& o);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  LatticePoint operator-() const;
  LatticePoint scaled(std::int64_t k) const;

  std::int64_t dot(const LatticePoint& o) const;

  // Unused trailing coordinates are always zero, so the defaulted
  // comparison is dimension-major then lexicographic.
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::array<std::int64_t, kMaxDim> coords_{};
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// 2D orientation: > 0 when a->b->c turns left.
std::int64_t orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

}  // namespace wedgepow
