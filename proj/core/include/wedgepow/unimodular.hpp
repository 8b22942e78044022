#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"

namespace wedgepow {

using IntMatrix = std::array<std::array<std::int64_t, kMaxDim>, kMaxDim>;

/// x -> A x + t with A integral and det A = +-1, i.e. an automorphism of Z^n.
class AffineUnimodularMap {
 public:
  /// Throws std::invalid_argument if det(linear) is not +-1. Only the
  /// leading dim x dim block of `linear` is used.
  AffineUnimodularMap(std::size_t dim, const IntMatrix& linear, const LatticePoint& translation);

  static AffineUnimodularMap identity(std::size_t dim);
  static AffineUnimodularMap translation(const LatticePoint& t);

  std::size_t dim() const { return dim_; }
  const IntMatrix& linear() const { return linear_; }
  const LatticePoint& translation() const { return translation_; }
  std::int64_t determinant() const;

  LatticePoint apply(const LatticePoint& x) const;
  LatticePoint apply_linear(const LatticePoint& x) const;
  AffineUnimodularMap inverse() const;
  /// (this o inner)(x) = this(inner(x)).
  AffineUnimodularMap compose(const AffineUnimodularMap& inner) const;

  friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

 private:
  std::size_t dim_;
  IntMatrix linear_{};
  LatticePoint translation_;
};

std::int64_t determinant(std::size_t dim, const IntMatrix& m);

PointConfiguration apply_map(const AffineUnimodularMap& map, const PointConfiguration& s);

/// A unimodular affine map sending s onto t, if one exists. Planar only.
///
/// Full-dimensional inputs: one ordered affine basis of s is fixed and every
/// ordered non-degenerate triple of t is tried as its image. Collinear
/// inputs compare the gap sequences along the line (or its reversal).
std::optional<AffineUnimodularMap> are_equivalent(const PointConfiguration& s,
                                                  const PointConfiguration& t);

/// Lattice points of the exceptional triangle conv{(0,1),(k,0),(-1,-1)}, k >= 1.
/// It has exactly k + 3 lattice points.
PointConfiguration exceptional_triangle(std::int64_t k);

/// k such that s is equivalent to exceptional_triangle(k), if any.
std::optional<std::int64_t> exception_index(const PointConfiguration& s);

}  // namespace wedgepow
