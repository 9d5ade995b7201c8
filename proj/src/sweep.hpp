#pragma once

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace leva::detail {

// Value-indexed table used by the right-to-left preprocessing sweeps: entry
// holds the smallest known position carrying the value, 0 when there is
// none. Under the +-1 property, the answer for any target below the current
// element is exactly the first occurrence of that target value.
class FirstOccurrence {
 public:
  FirstOccurrence(value_t vmin, value_t vmax)
      : vmin_(vmin), slots_(static_cast<std::size_t>(vmax - vmin) + 1, 0) {}

  index_t get(std::int64_t value) const {
    const std::int64_t off = value - vmin_;
    if (off < 0 || off >= static_cast<std::int64_t>(slots_.size())) return 0;
    return slots_[static_cast<std::size_t>(off)];
  }

  void set(value_t value, index_t pos) {
    slots_[static_cast<std::size_t>(value - vmin_)] = pos;
  }

 private:
  value_t vmin_;
  std::vector<index_t> slots_;
};

}  // namespace leva::detail
