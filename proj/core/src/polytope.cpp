#include "wedgepow/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wedgepow/checked.hpp"
#include "wedgepow/hull_membership.hpp"

namespace wedgepow {

namespace {

std::vector<LatticePoint> monotone_chain(std::span<const LatticePoint> sorted) {
  const std::size_t n = sorted.size();
  if (n <= 1) return {sorted.begin(), sorted.end()};
  std::vector<LatticePoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], sorted[i]) <= 0) --k;
    hull[k++] = sorted[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], sorted[i]) <= 0) --k;
    hull[k++] = sorted[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& q) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (q[i] < std::min(a[i], b[i]) || q[i] > std::max(a[i], b[i])) return false;
  }
  if (a.dim() == 1) return true;
  if (a.dim() == 2) return orientation(a, b, q) == 0;
  // 3D collinearity: cross product of (b-a) and (q-a) vanishes
  const auto u = b - a;
  const auto w = q - a;
  return checked_mul(u[1], w[2]) == checked_mul(u[2], w[1]) &&
         checked_mul(u[2], w[0]) == checked_mul(u[0], w[2]) &&
         checked_mul(u[0], w[1]) == checked_mul(u[1], w[0]);
}

LatticePoint cross3(const LatticePoint& u, const LatticePoint& w) {
  return {checked_sub(checked_mul(u[1], w[2]), checked_mul(u[2], w[1])),
          checked_sub(checked_mul(u[2], w[0]), checked_mul(u[0], w[2])),
          checked_sub(checked_mul(u[0], w[1]), checked_mul(u[1], w[0]))};
}

bool is_zero(const LatticePoint& p) {
  return std::all_of(p.coords().begin(), p.coords().end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace

int affine_rank(const PointConfiguration& s) {
  if (s.empty()) return -1;
  const auto& o = s[0];
  std::vector<LatticePoint> diffs;
  for (const auto& p : s) {
    if (p != o) diffs.push_back(p - o);
  }
  if (diffs.empty()) return 0;
  if (s.dim() == 1) return 1;
  const auto& d0 = diffs.front();
  std::vector<LatticePoint> normals;
  for (const auto& d : diffs) {
    if (s.dim() == 2) {
      if (checked_sub(checked_mul(d0[0], d[1]), checked_mul(d0[1], d[0])) != 0) return 2;
    } else {
      auto n = cross3(d0, d);
      if (!is_zero(n)) normals.push_back(n);
    }
  }
  if (s.dim() == 2 || normals.empty()) return 1;
  const auto& n0 = normals.front();
  for (const auto& d : diffs) {
    if (n0.dot(d) != 0) return 3;
  }
  return 2;
}

bool Polytope::contains(const LatticePoint& q) const {
  if (q.dim() != ambient_dim_) throw std::invalid_argument("membership query dimension mismatch");
  if (intrinsic_dim_ == 0) return q == vertices_.front();
  if (intrinsic_dim_ == 1 && vertices_.size() == 2) return on_segment(vertices_[0], vertices_[1], q);
  if (ambient_dim_ == 2) {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (orientation(vertices_[i], vertices_[(i + 1) % n], q) < 0) return false;
    }
    return true;
  }
  return point_in_hull(PointConfiguration::from_sorted_unique(ambient_dim_, vertices_), q);
}

Polytope convex_hull(const PointConfiguration& s) {
  if (s.empty()) throw std::invalid_argument("convex hull of an empty configuration");
  Polytope hull;
  hull.ambient_dim_ = s.dim();
  const auto pts = s.points();
  if (s.size() == 1) {
    hull.vertices_ = {pts.front()};
    return hull;
  }
  switch (s.dim()) {
    case 1:
      hull.intrinsic_dim_ = 1;
      hull.vertices_ = {pts.front(), pts.back()};
      break;
    case 2:
      hull.vertices_ = monotone_chain(pts);
      hull.intrinsic_dim_ = hull.vertices_.size() >= 3 ? 2 : 1;
      break;
    default: {
      hull.intrinsic_dim_ = affine_rank(s);
      for (const auto& p : pts) {
        if (!point_in_hull(s.without(p), p)) hull.vertices_.push_back(p);
      }
      break;
    }
  }
  return hull;
}

Polytope convex_hull_2d(const PointConfiguration& s) {
  if (s.dim() != 2) {
    throw std::invalid_argument("convex_hull_2d needs a planar configuration, got dimension " +
                                std::to_string(s.dim()));
  }
  return convex_hull(s);
}

PointConfiguration lattice_points_of_polytope(const Polytope& p) {
  const auto verts = p.vertices();
  const std::size_t dim = p.ambient_dim();
  if (dim > 2) {
    throw std::invalid_argument("lattice point enumeration is only supported in dimension <= 2");
  }
  std::vector<LatticePoint> out;
  if (p.intrinsic_dim() == 0) {
    out.push_back(verts.front());
  } else if (dim == 1) {
    for (auto x = verts[0][0]; x <= verts[1][0]; ++x) out.push_back({x});
  } else if (p.intrinsic_dim() == 1) {
    const auto d = verts[1] - verts[0];
    const auto g = std::gcd(d[0], d[1]);
    const LatticePoint step{d[0] / g, d[1] / g};
    for (std::int64_t t = 0; t <= g; ++t) out.push_back(verts[0] + step.scaled(t));
  } else {
    std::int64_t xmin = verts[0][0], xmax = verts[0][0];
    std::int64_t ymin = verts[0][1], ymax = verts[0][1];
    for (const auto& v : verts) {
      xmin = std::min(xmin, v[0]);
      xmax = std::max(xmax, v[0]);
      ymin = std::min(ymin, v[1]);
      ymax = std::max(ymax, v[1]);
    }
    const std::size_t n = verts.size();
    for (auto y = ymin; y <= ymax; ++y) {
      std::int64_t lo = xmin, hi = xmax;
      // Each CCW edge u->v keeps points q with dy*q.x <= dx*(y-u.y) + dy*u.x.
      for (std::size_t i = 0; i < n && lo <= hi; ++i) {
        const auto& u = verts[i];
        const auto& v = verts[(i + 1) % n];
        const auto dx = checked_sub(v[0], u[0]);
        const auto dy = checked_sub(v[1], u[1]);
        const auto rhs = checked_add(checked_mul(dx, checked_sub(y, u[1])), checked_mul(dy, u[0]));
        if (dy > 0) {
          hi = std::min(hi, floor_div(rhs, dy));
        } else if (dy < 0) {
          lo = std::max(lo, ceil_div(rhs, dy));
        } else if (checked_mul(dx, checked_sub(y, u[1])) < 0) {
          hi = lo - 1;
        }
      }
      for (auto x = lo; x <= hi; ++x) out.push_back({x, y});
    }
  }
  return PointConfiguration(dim, std::move(out));
}

PointConfiguration vertex_set(const PointConfiguration& s) {
  if (s.empty()) throw std::invalid_argument("vertex set of an empty configuration");
  const auto hull = convex_hull(s);
  return PointConfiguration(s.dim(), {hull.vertices().begin(), hull.vertices().end()});
}

PointConfiguration remove_vertex(const PointConfiguration& s, const LatticePoint& v) {
  if (!s.contains(v) || !vertex_set(s).contains(v)) {
    throw std::invalid_argument("remove_vertex: " + v.to_string() + " is not a vertex");
  }
  return s.without(v);
}

}  // namespace wedgepow
