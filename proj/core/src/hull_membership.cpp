#include "wedgepow/hull_membership.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>

namespace wedgepow {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Dense phase-one tableau: rows = constraints, columns = structural
// variables followed by one artificial per row, then the right-hand side.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const PointConfiguration& s, const LatticePoint& q)
      : rows_(s.dim() + 1), structural_(s.size()), cols_(structural_ + rows_ + 1) {
    cells_.assign(rows_ * cols_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::int64_t rhs = r < s.dim() ? q[r] : 1;
      const int sign = rhs < 0 ? -1 : 1;
      for (std::size_t j = 0; j < structural_; ++j) {
        at(r, j) = sign * (r < s.dim() ? s[j][r] : 1);
      }
      at(r, structural_ + r) = 1;
      at(r, cols_ - 1) = sign * Rational(rhs);
    }
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) basis_[r] = structural_ + r;
  }

  // Minimizes the artificial sum; true iff it reaches zero.
  bool solve() {
    // Reduced costs of the objective sum(artificials), expressed in the
    // current basis: c_j - sum_r a_rj for structural j.
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j + 1 < cols_; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = j >= structural_ ? Rational(1) : Rational(0);
        for (std::size_t r = 0; r < rows_; ++r) {
          if (basis_[r] >= structural_) reduced -= at(r, j);
        }
        if (reduced < 0) {
          entering = j;  // Bland: lowest index
          break;
        }
      }
      if (entering == cols_) break;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, entering) <= 0) continue;
        Rational ratio = at(r, cols_ - 1) / at(r, entering);
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) break;  // unbounded direction cannot occur in phase one
      pivot(leaving, entering);
    }
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] >= structural_) infeasibility += at(r, cols_ - 1);
    }
    return infeasibility == 0;
  }

  std::vector<std::pair<std::size_t, Rational>> structural_values() const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_ && at(r, cols_ - 1) != 0) {
        out.emplace_back(basis_[r], at(r, cols_ - 1));
      }
    }
    return out;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = at(row, col);
    for (std::size_t c = 0; c < cols_; ++c) at(row, c) /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rational f = at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

std::int64_t to_int64(const boost::multiprecision::cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("convex combination weight does not fit in int64");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::optional<std::vector<RationalWeight>> convex_combination(const PointConfiguration& s,
                                                              const LatticePoint& q) {
  if (q.dim() != s.dim()) throw std::invalid_argument("hull query dimension mismatch");
  if (s.empty()) return std::nullopt;
  const auto lo = s.min_corner();
  const auto hi = s.max_corner();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (q[i] < lo[i] || q[i] > hi[i]) return std::nullopt;
  }
  if (s.contains(q)) return std::vector<RationalWeight>{{q, 1, 1}};

  PhaseOneTableau tableau(s, q);
  if (!tableau.solve()) return std::nullopt;
  std::vector<RationalWeight> weights;
  for (const auto& [j, w] : tableau.structural_values()) {
    weights.push_back({s[j], to_int64(numerator(w)), to_int64(denominator(w))});
  }
  return weights;
}

bool point_in_hull(const PointConfiguration& s, const LatticePoint& q) {
  return convex_combination(s, q).has_value();
}

}  // namespace wedgepow
