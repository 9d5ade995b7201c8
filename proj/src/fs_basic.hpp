#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pm_array.hpp"
#include "types.hpp"

namespace leva {

// Find-Smaller over a +-1 array with one answer table per index.
//
// Table i holds, for distance j = 1..f(i), the first position right of i
// whose value is at most a_i - j (0 when there is none). Sizes are
// f(0) = n and f(i) = 3 * 2^lsb(i); queries whose distance exceeds f(i)
// are redirected to the table of an ancestor node of the implicit complete
// binary tree, which is guaranteed to cover them.
//
// Total size is Theta(n log n) words. The `clamp` build flag trims table i
// to min(f(i), a_i) when the input is nonnegative, which keeps every query
// with a nonnegative target valid while dropping entries such targets can
// never reach.
class BasicFs {
 public:
  struct Trace {
    int case_taken = 0;         // 1 self, 2 own table, 3 ancestor table
    std::uint64_t lca_node = 0; // set when case_taken == 3
  };

  static BasicFs build(std::vector<value_t> values, bool clamp = false);

  // First j > i with a_j <= x, nullopt when none. When x >= a_i, returns i
  // itself. Requires i < original_size().
  std::optional<index_t> query(index_t i, value_t x, Trace* trace = nullptr) const;

  // Answer table of index i (entry j-1 holds the answer for distance j),
  // with the raw 0 sentinel. For tests and fixtures.
  std::span<const index_t> table(index_t i) const;

  std::size_t table_size(index_t i) const { return offsets_[i + 1] - offsets_[i]; }
  const PmOneArray& array() const { return arr_; }
  bool clamped() const { return clamp_; }
  std::size_t word_count() const;

 private:
  BasicFs() = default;

  std::optional<index_t> decode(index_t entry) const {
    if (entry == 0 || entry >= arr_.original_size()) return std::nullopt;
    return entry;
  }

  PmOneArray arr_;
  std::vector<std::uint64_t> offsets_;  // offsets_[i] .. offsets_[i+1] in flat_
  std::vector<index_t> flat_;
  bool clamp_ = false;
  bool nonneg_ = false;  // min over the padded array is >= 0
};

}  // namespace leva
