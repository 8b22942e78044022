#include "wedgepow/lattice_point.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wedgepow/checked.hpp"

namespace wedgepow {

namespace {

void require_dim(std::size_t n) {
  if (n == 0 || n > kMaxDim) {
    throw std::invalid_argument("lattice point dimension must be 1..3, got " + std::to_string(n));
  }
}

void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("lattice point dimension mismatch: " + a.to_string() + " vs " +
                                b.to_string());
  }
}

}  // namespace

LatticePoint::LatticePoint(std::initializer_list<std::int64_t> coords) : dim_(coords.size()) {
  require_dim(dim_);
  std::size_t i = 0;
  for (auto c : coords) coords_[i++] = c;
}

LatticePoint::LatticePoint(std::span<const std::int64_t> coords) : dim_(coords.size()) {
  require_dim(dim_);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] = coords[i];
}

LatticePoint LatticePoint::zero(std::size_t dim) {
  require_dim(dim);
  LatticePoint p;
  p.dim_ = dim;
  return p;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
  return *this;
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = checked_sub(0, coords_[i]);
  return r;
}

LatticePoint LatticePoint::scaled(std::int64_t k) const {
  LatticePoint r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = checked_mul(coords_[i], k);
  return r;
}

std::int64_t LatticePoint::dot(const LatticePoint& o) const {
  require_same_dim(*this, o);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s = checked_add(s, checked_mul(coords_[i], o.coords_[i]));
  return s;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = p.dim();
  for (auto c : p.coords()) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const auto abx = checked_sub(b[0], a[0]);
  const auto aby = checked_sub(b[1], a[1]);
  const auto acx = checked_sub(c[0], a[0]);
  const auto acy = checked_sub(c[1], a[1]);
  return checked_sub(checked_mul(abx, acy), checked_mul(aby, acx));
}

}  // namespace wedgepow
