#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitops.hpp"
#include "types.hpp"

namespace leva {

enum class MicroVariant { kBv, kMask };

// Intra-block Find-Smaller answers via precomputed matrices over normalized
// blocks. A block of length b is identified by its b-1 step signs; for each
// of the 2^(b-1) possible blocks a b x (2b-1) matrix holds, per in-block
// position j and normalized target x in (-b, b), the first later in-block
// offset whose value is at most x (0 when none).
class BvMicro {
 public:
  // `values` must be padded to a multiple of b.
  static BvMicro build(std::span<const value_t> values, unsigned b);

  // First position strictly inside i's block and strictly after i whose value
  // is at most x. Targets outside the reachable normalized range yield
  // nullopt.
  std::optional<index_t> query(std::span<const value_t> values, index_t i, value_t x) const;

  std::uint32_t block_id(std::size_t block) const { return ids_[block]; }
  std::size_t table_count() const { return std::size_t{1} << (b_ - 1); }
  std::size_t word_count() const;

 private:
  BvMicro() = default;

  unsigned b_ = 0;
  std::vector<std::uint32_t> ids_;     // per-block identifier
  std::vector<std::uint8_t> tables_;   // [id][j][col], col = x + b - 1
};

// Intra-window Find-Smaller answers via per-index masks. Bit t of mask i is
// set when a_{i+t+1} is a strict running minimum of the values starting at i;
// under the +-1 property the k-th set bit marks the first position with value
// a_i - k, so a select instruction answers the query.
class MaskMicro {
 public:
  static MaskMicro build(std::span<const value_t> values, unsigned window) {
    return build_observed(values, window, [](std::size_t, std::span<const index_t>) {});
  }

  // Build variant that reports, after each step i, the stack of positions
  // j > i that are running minima of the suffix. Used by tests to check the
  // stack discipline.
  template <class Observer>
  static MaskMicro build_observed(std::span<const value_t> values, unsigned window, Observer&& observe);

  // First j in (i, i + window] with a_j <= x. Requires x < a_i.
  std::optional<index_t> query_window(std::span<const value_t> values, index_t i, value_t x) const {
    assert(x < values[i]);
    const std::uint64_t k = static_cast<std::uint64_t>(values[i]) - static_cast<std::uint64_t>(x);
    if (k > 64) return std::nullopt;
    auto p = bitops::select_bit(masks_[i], static_cast<unsigned>(k));
    if (!p) return std::nullopt;
    return static_cast<index_t>(i + 1 + *p);
  }

  std::uint64_t mask(index_t i) const { return masks_[i]; }
  unsigned window() const { return window_; }
  std::size_t word_count() const { return masks_.size(); }

 private:
  MaskMicro() = default;

  unsigned window_ = 0;
  std::vector<std::uint64_t> masks_;
};

template <class Observer>
MaskMicro MaskMicro::build_observed(std::span<const value_t> values, unsigned window, Observer&& observe) {
  assert(window >= 1 && window <= 64);
  MaskMicro m;
  m.window_ = window;
  const std::size_t n = values.size();
  m.masks_.assign(n, 0);

  // Right-to-left sweep. The stack keeps every suffix position that is a
  // running minimum seen from the current index, nearest on top; the window
  // mask is the same set restricted to the next `window` positions.
  std::vector<index_t> stack;
  const std::uint64_t wmask = (window == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << window) - 1;
  std::uint64_t mask = 0;
  if (n > 0) observe(n - 1, std::span<const index_t>(stack));
  for (std::size_t i = n - 1; i-- > 0;) {
    if (values[i + 1] == values[i] + 1) {
      // Step up to the right: the nearest minimum had value a_i and no longer
      // qualifies once the origin moves to i.
      if (!stack.empty()) {
        const index_t q = stack.back();
        stack.pop_back();
        const std::uint64_t bitpos = q - i - 2;  // position of q in the old mask
        if (bitpos < window) mask &= ~(std::uint64_t{1} << bitpos);
      }
      mask = (mask << 1) & wmask;
    } else {
      mask = ((mask << 1) | 1) & wmask;
      stack.push_back(static_cast<index_t>(i + 1));
    }
    m.masks_[i] = mask;
    observe(i, std::span<const index_t>(stack));
  }
  return m;
}

}  // namespace leva
