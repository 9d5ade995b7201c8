#include "fs_linear.hpp"

#include <algorithm>
#include <cassert>

#include "bitops.hpp"
#include "sweep.hpp"

namespace leva {

namespace {

std::uint64_t far_table_size(std::size_t block, std::size_t block_count) {
  return block == 0 ? block_count : 3ull << bitops::lsb(block);
}

}  // namespace

LinearFs LinearFs::build(std::vector<value_t> values, MicroVariant variant, unsigned mask_window) {
  LinearFs fs;
  fs.arr_ = PmOneArray::from_values(std::move(values));
  fs.b_ = std::max(1u, bitops::msb(fs.arr_.size()) / 2);
  fs.arr_.extend_to_multiple(fs.b_);

  const auto a = fs.arr_.values();
  const std::size_t n = a.size();
  const std::size_t blocks = n / fs.b_;
  const auto [lo, hi] = std::minmax_element(a.begin(), a.end());

  fs.near_.assign(blocks * 2 * fs.b_, 0);
  fs.far_offsets_.resize(blocks + 1);
  fs.far_offsets_[0] = 0;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    fs.far_offsets_[blk + 1] = fs.far_offsets_[blk] + far_table_size(blk, blocks);
  }
  fs.far_.assign(fs.far_offsets_[blocks], 0);

  // Same right-to-left first-occurrence sweep as the quadratic-table build,
  // emitting rows only at block boundaries.
  detail::FirstOccurrence first(*lo, *hi);
  for (std::size_t i = n; i-- > 0;) {
    if (i % fs.b_ == 0) {
      const std::size_t blk = i / fs.b_;
      const std::int64_t ai = a[i];
      index_t* near_row = fs.near_.data() + blk * 2 * fs.b_;
      for (std::uint64_t j = 1; j <= 2 * fs.b_; ++j) {
        near_row[j - 1] = first.get(ai - static_cast<std::int64_t>(j));
      }
      index_t* far_row = fs.far_.data() + fs.far_offsets_[blk];
      const std::uint64_t fsize = fs.far_offsets_[blk + 1] - fs.far_offsets_[blk];
      for (std::uint64_t j = 1; j <= fsize; ++j) {
        const index_t p = first.get(ai - static_cast<std::int64_t>(j) * fs.b_);
        const index_t k = p / fs.b_;
        far_row[j - 1] = k;
        // A truncated entry still brackets the boundary value of its block.
        assert(k == 0 || (ai - static_cast<std::int64_t>(j) * fs.b_ <= a[k * fs.b_] &&
                          a[k * fs.b_] < ai - (static_cast<std::int64_t>(j) - 1) * fs.b_));
      }
    }
    first.set(a[i], static_cast<index_t>(i));
  }

  if (variant == MicroVariant::kBv) {
    fs.micro_ = BvMicro::build(a, fs.b_);
  } else {
    unsigned window = mask_window == 0 ? fs.b_ : mask_window;
    fs.micro_ = MaskMicro::build(a, std::min(window, 64u));
  }
  return fs;
}

MicroVariant LinearFs::variant() const {
  return std::holds_alternative<BvMicro>(micro_) ? MicroVariant::kBv : MicroVariant::kMask;
}

std::span<const index_t> LinearFs::near(std::size_t block) const {
  return {near_.data() + block * 2 * b_, 2 * static_cast<std::size_t>(b_)};
}

std::span<const index_t> LinearFs::far(std::size_t block) const {
  return {far_.data() + far_offsets_[block],
          static_cast<std::size_t>(far_offsets_[block + 1] - far_offsets_[block])};
}

std::optional<index_t> LinearFs::micro_hit(index_t pos, value_t x) const {
  // The micro contract is strictly-within-block: an answer at or past the
  // next boundary is left to the boundary re-entry.
  if (const auto* bv = std::get_if<BvMicro>(&micro_)) {
    auto m = bv->query(arr_.values(), pos, x);
    assert(!m || (*m > pos && *m < (pos / b_ + 1) * b_));
    return m;
  }
  const auto& mask = std::get<MaskMicro>(micro_);
  auto m = mask.query_window(arr_.values(), pos, x);
  if (m && *m < (pos / b_ + 1) * b_) return m;
  return std::nullopt;
}

void LinearFs::note_hops(int hops) const {
  std::uint32_t seen = max_hops_->load(std::memory_order_relaxed);
  while (static_cast<std::uint32_t>(hops) > seen &&
         !max_hops_->compare_exchange_weak(seen, static_cast<std::uint32_t>(hops),
                                           std::memory_order_relaxed)) {
  }
}

std::optional<index_t> LinearFs::query(index_t i, value_t x, Trace* trace) const {
  assert(i < arr_.original_size());
  const auto a = arr_.values();
  const std::int64_t n = static_cast<std::int64_t>(a.size());

  // Below every element: without this cut the block-0 far table could be
  // asked for distances past its end.
  if (x < static_cast<std::int64_t>(a[0]) - n) {
    if (trace) trace->push(0);
    note_hops(0);
    return std::nullopt;
  }

  std::size_t pos = i;
  int hops = 0;
  const auto finish = [&](std::optional<index_t> result) {
    if (trace) trace->hops = hops;
    note_hops(hops);
    return result;
  };
  for (;;) {
    const std::int64_t av = a[pos];
    if (x >= av) {
      if (trace) trace->push(1);
      return finish(pos < arr_.original_size()
                        ? std::optional<index_t>(static_cast<index_t>(pos))
                        : std::nullopt);
    }
    const std::size_t blk = pos / b_;
    const unsigned j = pos % b_;

    if (j != 0) {
      if (auto m = micro_hit(static_cast<index_t>(pos), x)) {
        if (trace) trace->push(30);
        return finish(decode(*m));
      }
      // No in-block answer: the element sought lies at or beyond the next
      // boundary.
      if (trace) trace->push(3);
      const std::size_t next = (blk + 1) * b_;
      if (next >= a.size()) return finish(std::nullopt);
      pos = next;
      ++hops;
      assert(hops <= 3);
      continue;
    }

    const std::int64_t d0 = av - x;  // >= 1 here
    if (d0 <= 2 * static_cast<std::int64_t>(b_)) {
      if (trace) trace->push(21);
      return finish(decode(near_[blk * 2 * b_ + static_cast<std::size_t>(d0) - 1]));
    }

    const std::int64_t d = d0 / b_;
    if (d <= static_cast<std::int64_t>(far_size(blk))) {
      const index_t k = far_[far_offsets_[blk] + static_cast<std::uint64_t>(d) - 1];
      if (trace) trace->push(221);
      if (k == 0) return finish(std::nullopt);
      // The far hop lands within 2b of the target, so the next round resolves
      // in the near array (or at the boundary itself).
      assert(x >= static_cast<std::int64_t>(a[static_cast<std::size_t>(k) * b_]) -
                      2 * static_cast<std::int64_t>(b_));
      pos = static_cast<std::size_t>(k) * b_;
      ++hops;
      assert(hops <= 3);
      continue;
    }

    // Distance exceeds this far table: hop to the covering ancestor block.
    assert(blk >= 1);
    const std::uint64_t k = bitops::bt_lca(static_cast<std::int64_t>(blk) - d + 1, blk);
    assert(static_cast<std::int64_t>(a[k * b_]) - x <=
           static_cast<std::int64_t>(far_table_size(k, block_count())) *
               static_cast<std::int64_t>(b_));
    if (trace) {
      trace->push(222);
      trace->lca_block = k;
    }
    pos = k * b_;
    ++hops;
    assert(hops <= 3);
  }
}

std::size_t LinearFs::word_count() const {
  std::size_t micro_words = std::holds_alternative<BvMicro>(micro_)
                                ? std::get<BvMicro>(micro_).word_count()
                                : std::get<MaskMicro>(micro_).word_count();
  return arr_.word_count() + (near_.size() * sizeof(index_t) + 7) / 8 + far_offsets_.size() +
         (far_.size() * sizeof(index_t) + 7) / 8 + micro_words;
}

}  // namespace leva
