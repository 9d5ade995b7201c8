#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "types.hpp"

namespace leva {

// A +-1 array: adjacent elements differ by exactly one. The array is padded
// to a power of two with strictly ascending values; since an unanswered query
// means every later original value exceeds the target, ascending padding can
// never produce a spurious answer, so the padding is semantically inert.
class PmOneArray {
 public:
  // Validates the +-1 property and pads to the next power of two.
  // Throws Error(kNotPlusMinusOne) naming the first offending position.
  static PmOneArray from_values(std::vector<value_t> values);

  // Extends with further ascending values until size() is a multiple of m.
  void extend_to_multiple(std::size_t m);

  std::span<const value_t> values() const { return vals_; }
  value_t operator[](std::size_t i) const { return vals_[i]; }
  std::size_t size() const { return vals_.size(); }
  std::size_t original_size() const { return n_orig_; }

  std::size_t word_count() const;

  PmOneArray() = default;  // empty until assigned from from_values

 private:
  std::vector<value_t> vals_;
  std::size_t n_orig_ = 0;
};

}  // namespace leva
