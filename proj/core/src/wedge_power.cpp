#include "wedgepow/wedge_power.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedgepow {

namespace {

PointConfiguration naive_wedge(const PointConfiguration& base, std::size_t p) {
  const std::size_t n = base.size();
  const auto subsets = binomial(n, p);
  if (subsets > kNaiveSubsetBudget) {
    throw BudgetExceeded("naive wedge power needs C(" + std::to_string(n) + "," + std::to_string(p) +
                         ") = " + std::to_string(subsets) + " subsets, budget is " +
                         std::to_string(kNaiveSubsetBudget));
  }
  std::vector<LatticePoint> sums;
  sums.reserve(static_cast<std::size_t>(subsets));
  std::vector<std::size_t> pick(p);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    auto s = LatticePoint::zero(base.dim());
    for (auto i : pick) s += base[i];
    sums.push_back(s);
    // next combination in lexicographic order
    std::size_t k = p;
    while (k > 0 && pick[k - 1] == n - p + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return PointConfiguration(base.dim(), std::move(sums));
}

}  // namespace

WedgeMethod parse_wedge_method(std::string_view name) {
  if (name == "dp") return WedgeMethod::dp;
  if (name == "naive") return WedgeMethod::naive;
  throw std::invalid_argument("unknown wedge method '" + std::string(name) + "' (expected dp|naive)");
}

std::string_view to_string(WedgeMethod m) { return m == WedgeMethod::dp ? "dp" : "naive"; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r = C(n-k+i-1, i-1) -> C(n-k+i, i); cancel gcd(r, i) first so the
    // division stays exact without a wider intermediate.
    const auto g = std::gcd(r, i);
    const auto factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(r / g, factor, &r)) return std::numeric_limits<std::uint64_t>::max();
  }
  return r;
}

WedgeResult wedge_power(const WedgeQuery& query, WedgeMethod method) {
  const auto& base = query.base;
  if (query.p < 0 || static_cast<std::uint64_t>(query.p) > base.size()) {
    return {PointConfiguration(base.dim()), false};
  }
  const auto p = static_cast<std::size_t>(query.p);
  if (p == 0) return {PointConfiguration(base.dim(), {LatticePoint::zero(base.dim())}), true};
  if (method == WedgeMethod::naive) return {naive_wedge(base, p), true};
  return {exact_count_subset_sums(base, p), true};
}

PointConfiguration wedge_power(const PointConfiguration& base, std::int64_t p, WedgeMethod method) {
  return wedge_power(WedgeQuery{base, p}, method).points;
}

PointConfiguration reflect_complement(const PointConfiguration& s, std::int64_t p,
                                      WedgeMethod method) {
  if (p < 0 || static_cast<std::uint64_t>(p) > s.size()) {
    throw std::invalid_argument("reflect_complement: p must lie in [0, N]");
  }
  const auto pivot = ComplementPivot::of(s);
  std::vector<LatticePoint> reflected;
  for (const auto& m : wedge_power(s, p, method)) reflected.push_back(pivot.u0 - m);
  return PointConfiguration(s.dim(), std::move(reflected));
}

}  // namespace wedgepow
