#include "fs_basic.hpp"

#include <algorithm>
#include <cassert>

#include "bitops.hpp"
#include "sweep.hpp"

namespace leva {

BasicFs BasicFs::build(std::vector<value_t> values, bool clamp) {
  BasicFs fs;
  fs.arr_ = PmOneArray::from_values(std::move(values));
  fs.clamp_ = clamp;

  const auto a = fs.arr_.values();
  const std::size_t n = a.size();
  const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
  fs.nonneg_ = *lo >= 0;

  // The trimmed layout assumes nonnegative values (targets below zero are
  // answered without table access); with negatives the full sizes stay.
  const bool trim = clamp && fs.nonneg_;

  fs.offsets_.resize(n + 1);
  fs.offsets_[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t size = (i == 0) ? n : 3ull << bitops::lsb(i);
    if (trim) size = std::min<std::uint64_t>(size, static_cast<std::uint64_t>(a[i]));
    fs.offsets_[i + 1] = fs.offsets_[i] + size;
  }
  fs.flat_.assign(fs.offsets_[n], 0);

  // Right-to-left sweep: when table i is emitted, the first-occurrence table
  // describes positions > i, and the answer for target a_i - j is exactly the
  // first occurrence of that value (a +-1 walk cannot skip it).
  detail::FirstOccurrence first(*lo, *hi);
  for (std::size_t i = n; i-- > 0;) {
    index_t* row = fs.flat_.data() + fs.offsets_[i];
    const std::uint64_t size = fs.offsets_[i + 1] - fs.offsets_[i];
    const std::int64_t ai = a[i];
    for (std::uint64_t j = 1; j <= size; ++j) row[j - 1] = first.get(ai - static_cast<std::int64_t>(j));
    first.set(a[i], static_cast<index_t>(i));
  }
  return fs;
}

std::span<const index_t> BasicFs::table(index_t i) const {
  return {flat_.data() + offsets_[i], static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

std::optional<index_t> BasicFs::query(index_t i, value_t x, Trace* trace) const {
  assert(i < arr_.original_size());
  const auto a = arr_.values();
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t ai = a[i];

  if (x >= ai) {
    if (trace) *trace = {1, 0};
    return i;
  }
  if (clamp_ && nonneg_ && x < 0) return std::nullopt;  // nothing is below zero
  if (x < static_cast<std::int64_t>(a[0]) - n) return std::nullopt;  // below every element

  const std::int64_t d = ai - x;
  if (d <= static_cast<std::int64_t>(table_size(i))) {
    if (trace) *trace = {2, 0};
    return decode(flat_[offsets_[i] + static_cast<std::uint64_t>(d) - 1]);
  }

  // Distance exceeds this table: hop to the covering ancestor of the implicit
  // complete binary tree. The hop target still bounds the true answer because
  // every value in (i-d, i] exceeds x.
  assert(i >= 1);
  const std::uint64_t k = bitops::bt_lca(static_cast<std::int64_t>(i) - d + 1, i);
  assert(static_cast<std::int64_t>(k) > static_cast<std::int64_t>(i) - d);
  const std::int64_t dk = static_cast<std::int64_t>(a[k]) - x;
  assert(dk > 0 && dk <= static_cast<std::int64_t>(table_size(static_cast<index_t>(k))));
  if (trace) *trace = {3, k};
  return decode(flat_[offsets_[k] + static_cast<std::uint64_t>(dk) - 1]);
}

std::size_t BasicFs::word_count() const {
  return arr_.word_count() + offsets_.size() + (flat_.size() * sizeof(index_t) + 7) / 8;
}

}  // namespace leva
