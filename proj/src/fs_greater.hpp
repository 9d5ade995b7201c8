#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fs_linear.hpp"
#include "types.hpp"

namespace leva {

// Find-Greater: first j > i with a_j >= x. Fully symmetric to Find-Smaller,
// so it is realized as a LinearFs over the element-wise negated array rather
// than duplicated code.
class GreaterFs {
 public:
  static GreaterFs build(std::span<const value_t> values, MicroVariant variant,
                         unsigned mask_window = 0) {
    std::vector<value_t> negated(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) negated[i] = -values[i];
    return GreaterFs(LinearFs::build(std::move(negated), variant, mask_window));
  }

  // First j > i with a_j >= x, nullopt when none. When a_i >= x, returns i
  // itself (same self-return convention as the Find-Smaller query).
  std::optional<index_t> query(index_t i, value_t x, LinearFs::Trace* trace = nullptr) const {
    return inner_.query(i, -x, trace);
  }

  const LinearFs& inner() const { return inner_; }
  std::size_t word_count() const { return inner_.word_count(); }

 private:
  explicit GreaterFs(LinearFs inner) : inner_(std::move(inner)) {}

  LinearFs inner_;
};

}  // namespace leva
