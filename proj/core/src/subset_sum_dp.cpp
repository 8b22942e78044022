#include "wedgepow/subset_sum_dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <vector>

#include "wedgepow/checked.hpp"

namespace wedgepow {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

struct BoxLayout {
  LatticePoint origin;  // min corner of the base
  std::array<std::int64_t, kMaxDim> extent{};
  std::array<std::int64_t, kMaxDim> stride{};
  std::size_t cells = 1;
  std::size_t words = 0;  // per layer, including one word of tail padding
};

BoxLayout make_layout(const PointConfiguration& base, std::size_t count) {
  BoxLayout box;
  const std::size_t dim = base.dim();
  box.origin = base.min_corner();
  const auto hi = base.max_corner();
  std::int64_t cells = 1;
  for (std::size_t i = dim; i-- > 0;) {
    const auto span = checked_sub(hi[i], box.origin[i]);
    box.extent[i] = checked_add(checked_mul(span, static_cast<std::int64_t>(count)), 1);
    box.stride[i] = cells;
    cells = checked_mul(cells, box.extent[i]);
  }
  box.cells = static_cast<std::size_t>(cells);
  box.words = box.cells / kWordBits + 2;
  return box;
}

// dst |= src << offset, over the nonzero word range [lo, hi] of src.
void shifted_or(std::vector<Word>& dst, const std::vector<Word>& src, std::size_t offset,
                std::size_t lo, std::size_t hi) {
  const std::size_t word_shift = offset / kWordBits;
  const unsigned bit_shift = offset % kWordBits;
  Word* out = dst.data() + word_shift;
  const Word* in = src.data();
  if (bit_shift == 0) {
    for (std::size_t w = lo; w <= hi; ++w) out[w] |= in[w];
    return;
  }
  const unsigned back = kWordBits - bit_shift;
  for (std::size_t w = lo; w <= hi; ++w) {
    const Word v = in[w];
    out[w] |= v << bit_shift;
    out[w + 1] |= v >> back;
  }
}

struct Layer {
  std::vector<Word> bits;
  std::size_t lo = std::numeric_limits<std::size_t>::max();  // first nonzero word
  std::size_t hi = 0;                                        // last nonzero word
  bool empty() const { return lo > hi; }
};

}  // namespace

std::size_t subset_sum_dp_bytes(const PointConfiguration& base, std::size_t count) {
  if (base.empty()) return 0;
  const auto box = make_layout(base, count);
  std::size_t bytes = 0;
  if (__builtin_mul_overflow(box.words * sizeof(Word), count + 1, &bytes)) {
    return std::numeric_limits<std::size_t>::max();
  }
  return bytes;
}

PointConfiguration exact_count_subset_sums(const PointConfiguration& base, std::size_t count,
                                           std::size_t memory_budget) {
  const std::size_t dim = base.dim();
  const std::size_t n = base.size();
  if (count > n) throw std::invalid_argument("subset size exceeds the number of points");
  if (count == 0) return PointConfiguration(dim, {LatticePoint::zero(dim)});

  const std::size_t bytes = subset_sum_dp_bytes(base, count);
  if (bytes > memory_budget) {
    throw BudgetExceeded("subset-sum DP needs " + std::to_string(bytes) + " bytes, budget is " +
                         std::to_string(memory_budget));
  }
  const auto box = make_layout(base, count);

  std::vector<std::size_t> offsets;
  offsets.reserve(n);
  for (const auto& p : base) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      off += static_cast<std::size_t>(p[i] - box.origin[i]) * static_cast<std::size_t>(box.stride[i]);
    }
    offsets.push_back(off);
  }

  std::vector<Layer> layers(count + 1);
  for (auto& layer : layers) layer.bits.assign(box.words, 0);
  layers[0].bits[0] = 1;
  layers[0].lo = layers[0].hi = 0;

  for (std::size_t i = 0; i < n; ++i) {
    // Layers below `floor` can no longer reach `count` with the points left.
    const std::size_t remaining = n - 1 - i;
    const std::size_t top = std::min(i + 1, count);
    const std::size_t floor = count > remaining ? std::max<std::size_t>(1, count - remaining) : 1;
    const std::size_t word_shift = offsets[i] / kWordBits;
    for (std::size_t c = top; c >= floor; --c) {
      const Layer& src = layers[c - 1];
      if (src.empty()) continue;
      Layer& dst = layers[c];
      shifted_or(dst.bits, src.bits, offsets[i], src.lo, src.hi);
      dst.lo = std::min(dst.lo, src.lo + word_shift);
      const std::size_t top_word = src.hi + word_shift;
      dst.hi = std::max(dst.hi, dst.bits[top_word + 1] != 0 ? top_word + 1 : top_word);
      if (c == 1) break;
    }
  }

  const Layer& last = layers[count];
  std::vector<LatticePoint> sums;
  const auto base_shift = box.origin.scaled(static_cast<std::int64_t>(count));
  for (std::size_t w = last.lo; !last.empty() && w <= last.hi; ++w) {
    for (Word bits = last.bits[w]; bits != 0; bits &= bits - 1) {
      std::size_t idx = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      auto pt = LatticePoint::zero(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        const auto stride = static_cast<std::size_t>(box.stride[d]);
        pt[d] = static_cast<std::int64_t>(idx / stride) + base_shift[d];
        idx %= stride;
      }
      sums.push_back(pt);
    }
  }
  return PointConfiguration::from_sorted_unique(dim, std::move(sums));
}

}  // namespace wedgepow
