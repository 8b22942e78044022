#include "wedgepow/unimodular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "wedgepow/checked.hpp"
#include "wedgepow/polytope.hpp"

namespace wedgepow {

namespace {

std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return checked_sub(checked_mul(a, d), checked_mul(b, c));
}

// Adjugate, so that m * adj(m) = det(m) I.
IntMatrix adjugate(std::size_t dim, const IntMatrix& m) {
  IntMatrix adj{};
  if (dim == 1) {
    adj[0][0] = 1;
  } else if (dim == 2) {
    adj[0][0] = m[1][1];
    adj[0][1] = checked_sub(0, m[0][1]);
    adj[1][0] = checked_sub(0, m[1][0]);
    adj[1][1] = m[0][0];
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        // cofactor of (j, i)
        const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        adj[i][j] = det2(m[r0][c0], m[r0][c1], m[r1][c0], m[r1][c1]);
      }
    }
  }
  return adj;
}

IntMatrix multiply(std::size_t dim, const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c{};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
  return c;
}

// Integers x, y with a x + b y = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const auto q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, checked_sub(old_r, checked_mul(q, r)));
    std::tie(old_s, s) = std::make_tuple(s, checked_sub(old_s, checked_mul(q, s)));
    std::tie(old_t, t) = std::make_tuple(t, checked_sub(old_t, checked_mul(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Unimodular matrix whose first column is the primitive vector d.
IntMatrix complete_primitive(const LatticePoint& d) {
  const auto [g, x, y] = extended_gcd(d[0], d[1]);
  if (g != 1) throw std::logic_error("complete_primitive: vector is not primitive");
  IntMatrix b{};
  b[0][0] = d[0];
  b[1][0] = d[1];
  b[0][1] = checked_sub(0, y);
  b[1][1] = x;
  return b;  // det = d0*x + d1*y = 1
}

bool maps_onto(const AffineUnimodularMap& map, const PointConfiguration& s,
               const PointConfiguration& t) {
  for (const auto& p : s) {
    if (!t.contains(map.apply(p))) return false;
  }
  return true;  // injective and |s| == |t|
}

struct LineParametrization {
  LatticePoint origin;     // the point with parameter 0
  LatticePoint direction;  // primitive
  std::vector<std::int64_t> params;  // sorted ascending, starting at 0
};

LineParametrization parametrize_collinear(const PointConfiguration& s) {
  const auto& a = s.points().front();
  const auto& b = s.points().back();
  const auto diff = b - a;
  const auto g = std::gcd(diff[0], diff[1]);
  const LatticePoint dir{diff[0] / g, diff[1] / g};
  const std::size_t axis = dir[0] != 0 ? 0 : 1;
  LineParametrization line{a, dir, {}};
  for (const auto& p : s) line.params.push_back((p[axis] - a[axis]) / dir[axis]);
  std::sort(line.params.begin(), line.params.end());
  return line;
}

std::optional<AffineUnimodularMap> collinear_equivalence(const PointConfiguration& s,
                                                         const PointConfiguration& t) {
  const auto ls = parametrize_collinear(s);
  const auto lt = parametrize_collinear(t);
  const auto span_t = lt.params.back();
  std::vector<std::int64_t> reversed;
  for (auto it = lt.params.rbegin(); it != lt.params.rend(); ++it) reversed.push_back(span_t - *it);

  const auto bs = complete_primitive(ls.direction);
  const auto bs_inv = adjugate(2, bs);  // det(bs) = 1
  for (int orient : {1, -1}) {
    if (ls.params != (orient == 1 ? lt.params : reversed)) continue;
    auto bt = complete_primitive(lt.direction);
    bt[0][0] *= orient;
    bt[1][0] *= orient;
    const auto linear = multiply(2, bt, bs_inv);
    const LatticePoint image_origin = orient == 1 ? lt.origin : lt.origin + lt.direction.scaled(span_t);
    AffineUnimodularMap probe(2, linear, LatticePoint::zero(2));
    AffineUnimodularMap map(2, linear, image_origin - probe.apply_linear(ls.origin));
    if (maps_onto(map, s, t)) return map;
  }
  return std::nullopt;
}

}  // namespace

std::int64_t determinant(std::size_t dim, const IntMatrix& m) {
  switch (dim) {
    case 1:
      return m[0][0];
    case 2:
      return det2(m[0][0], m[0][1], m[1][0], m[1][1]);
    case 3: {
      std::int64_t d = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        const auto minor = det2(m[1][(j + 1) % 3], m[1][(j + 2) % 3], m[2][(j + 1) % 3],
                                m[2][(j + 2) % 3]);
        d = checked_add(d, checked_mul(m[0][j], minor));
      }
      return d;
    }
    default:
      throw std::invalid_argument("determinant: dimension must be 1..3");
  }
}

AffineUnimodularMap::AffineUnimodularMap(std::size_t dim, const IntMatrix& linear,
                                         const LatticePoint& translation)
    : dim_(dim), translation_(translation) {
  if (translation.dim() != dim) throw std::invalid_argument("translation dimension mismatch");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) linear_[i][j] = linear[i][j];
  const auto d = wedgepow::determinant(dim, linear_);
  if (d != 1 && d != -1) {
    throw std::invalid_argument("affine map is not unimodular: determinant " + std::to_string(d));
  }
}

AffineUnimodularMap AffineUnimodularMap::identity(std::size_t dim) {
  IntMatrix eye{};
  for (std::size_t i = 0; i < dim; ++i) eye[i][i] = 1;
  return {dim, eye, LatticePoint::zero(dim)};
}

AffineUnimodularMap AffineUnimodularMap::translation(const LatticePoint& t) {
  auto m = identity(t.dim());
  m.translation_ = t;
  return m;
}

std::int64_t AffineUnimodularMap::determinant() const { return wedgepow::determinant(dim_, linear_); }

LatticePoint AffineUnimodularMap::apply_linear(const LatticePoint& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("map/point dimension mismatch");
  auto y = LatticePoint::zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) y[i] = checked_add(y[i], checked_mul(linear_[i][j], x[j]));
  return y;
}

LatticePoint AffineUnimodularMap::apply(const LatticePoint& x) const {
  return apply_linear(x) + translation_;
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  auto inv = adjugate(dim_, linear_);
  const auto d = determinant();
  for (auto& row : inv)
    for (auto& c : row) c = checked_mul(c, d);  // A^-1 = adj(A) / det, det = +-1
  AffineUnimodularMap probe(dim_, inv, LatticePoint::zero(dim_));
  return {dim_, inv, -probe.apply_linear(translation_)};
}

AffineUnimodularMap AffineUnimodularMap::compose(const AffineUnimodularMap& inner) const {
  if (inner.dim_ != dim_) throw std::invalid_argument("cannot compose maps of different dimension");
  return {dim_, multiply(dim_, linear_, inner.linear_), apply(inner.translation_)};
}

PointConfiguration apply_map(const AffineUnimodularMap& map, const PointConfiguration& s) {
  if (map.dim() != s.dim()) throw std::invalid_argument("map/configuration dimension mismatch");
  std::vector<LatticePoint> image;
  image.reserve(s.size());
  for (const auto& p : s) image.push_back(map.apply(p));
  return PointConfiguration(s.dim(), std::move(image));
}

std::optional<AffineUnimodularMap> are_equivalent(const PointConfiguration& s,
                                                  const PointConfiguration& t) {
  if (s.dim() != 2 || t.dim() != 2) {
    throw std::invalid_argument("equivalence search needs planar configurations");
  }
  if (s.size() != t.size()) return std::nullopt;
  if (s.empty()) return AffineUnimodularMap::identity(2);

  const int rank = affine_rank(s);
  if (rank != affine_rank(t)) return std::nullopt;
  if (rank == 0) return AffineUnimodularMap::translation(t[0] - s[0]);
  if (rank == 1) return collinear_equivalence(s, t);

  // Fixed affine basis of s: first two points plus the first point off their line.
  const auto& a0 = s[0];
  const auto& a1 = s[1];
  const LatticePoint* a2 = nullptr;
  for (const auto& p : s) {
    if (orientation(a0, a1, p) != 0) {
      a2 = &p;
      break;
    }
  }
  const auto u = a1 - a0;
  const auto w = *a2 - a0;
  const IntMatrix basis_s{{{u[0], w[0], 0}, {u[1], w[1], 0}, {0, 0, 0}}};
  const auto det_s = determinant(2, basis_s);
  const auto adj_s = adjugate(2, basis_s);

  const auto n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto det_t = orientation(t[i], t[j], t[k]);
        if (det_t != det_s && det_t != -det_s) continue;
        const auto bu = t[j] - t[i];
        const auto bw = t[k] - t[i];
        const IntMatrix basis_t{{{bu[0], bw[0], 0}, {bu[1], bw[1], 0}, {0, 0, 0}}};
        // linear = basis_t * basis_s^-1 = basis_t * adj_s / det_s
        auto linear = multiply(2, basis_t, adj_s);
        bool integral = true;
        for (std::size_t r = 0; r < 2 && integral; ++r) {
          for (std::size_t c = 0; c < 2; ++c) {
            if (linear[r][c] % det_s != 0) {
              integral = false;
              break;
            }
            linear[r][c] /= det_s;
          }
        }
        if (!integral) continue;
        AffineUnimodularMap probe(2, linear, LatticePoint::zero(2));
        AffineUnimodularMap map(2, linear, t[i] - probe.apply_linear(a0));
        if (maps_onto(map, s, t)) return map;
      }
    }
  }
  return std::nullopt;
}

PointConfiguration exceptional_triangle(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("exceptional triangle index must be >= 1");
  const PointConfiguration corners{{0, 1}, {k, 0}, {-1, -1}};
  return lattice_points_of_polytope(convex_hull_2d(corners));
}

std::optional<std::int64_t> exception_index(const PointConfiguration& s) {
  if (s.dim() != 2) throw std::invalid_argument("exception_index needs a planar configuration");
  if (s.size() < 4) return std::nullopt;
  const auto k = static_cast<std::int64_t>(s.size()) - 3;
  if (are_equivalent(s, exceptional_triangle(k))) return k;
  return std::nullopt;
}

}  // namespace wedgepow
