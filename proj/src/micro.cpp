#include "micro.hpp"

namespace leva {

BvMicro BvMicro::build(std::span<const value_t> values, unsigned b) {
  assert(b >= 1 && b <= 32);
  assert(values.size() % b == 0);
  BvMicro m;
  m.b_ = b;

  const std::size_t ids = std::size_t{1} << (b - 1);
  const std::size_t cols = 2 * b - 1;
  m.tables_.assign(ids * b * cols, 0);

  std::vector<value_t> block(b);
  std::vector<std::uint8_t> first(cols);  // first offset per normalized value
  for (std::size_t id = 0; id < ids; ++id) {
    block[0] = 0;
    for (unsigned t = 0; t + 1 < b; ++t) {
      block[t + 1] = block[t] + (((id >> t) & 1u) ? 1 : -1);
    }
    std::uint8_t* table = m.tables_.data() + id * b * cols;
    for (unsigned j = 0; j < b; ++j) {
      std::fill(first.begin(), first.end(), 0);
      for (unsigned o = b; o-- > j + 1;) {
        first[static_cast<unsigned>(block[o] + static_cast<int>(b) - 1)] = static_cast<std::uint8_t>(o);
      }
      // Running minimum over positions of values <= x, in ascending x order.
      std::uint8_t best = 0;
      std::uint8_t* row = table + j * cols;
      for (std::size_t col = 0; col < cols; ++col) {
        if (first[col] != 0 && (best == 0 || first[col] < best)) best = first[col];
        row[col] = best;
      }
    }
  }

  const std::size_t blocks = values.size() / b;
  m.ids_.resize(blocks);
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    std::uint32_t id = 0;
    for (unsigned t = 0; t + 1 < b; ++t) {
      if (values[blk * b + t + 1] > values[blk * b + t]) id |= std::uint32_t{1} << t;
    }
    m.ids_[blk] = id;
  }
  return m;
}

std::optional<index_t> BvMicro::query(std::span<const value_t> values, index_t i, value_t x) const {
  const std::size_t blk = i / b_;
  const unsigned j = i % b_;
  const std::int64_t col = static_cast<std::int64_t>(x) - values[blk * b_] + (b_ - 1);
  if (col < 0 || col >= static_cast<std::int64_t>(2 * b_ - 1)) return std::nullopt;
  const std::size_t cols = 2 * b_ - 1;
  const std::uint8_t o = tables_[ids_[blk] * (b_ * cols) + j * cols + static_cast<std::size_t>(col)];
  if (o == 0) return std::nullopt;
  return static_cast<index_t>(blk * b_ + o);
}

std::size_t BvMicro::word_count() const {
  return (tables_.size() + ids_.size() * sizeof(std::uint32_t) + 7) / 8;
}

}  // namespace leva
