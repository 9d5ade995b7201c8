#include "pm_array.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace leva {

PmOneArray PmOneArray::from_values(std::vector<value_t> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "array must not be empty");
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(values[i + 1]) - values[i];
    if (diff != 1 && diff != -1) {
      throw Error(ErrorCode::kNotPlusMinusOne,
                  "adjacent difference is not +-1 at position " + std::to_string(i),
                  static_cast<std::int64_t>(i));
    }
  }
  PmOneArray arr;
  arr.n_orig_ = values.size();
  std::size_t padded = std::bit_ceil(values.size());
  values.reserve(padded);
  while (values.size() < padded) values.push_back(values.back() + 1);
  arr.vals_ = std::move(values);
  return arr;
}

void PmOneArray::extend_to_multiple(std::size_t m) {
  while (vals_.size() % m != 0) vals_.push_back(vals_.back() + 1);
}

std::size_t PmOneArray::word_count() const {
  return (vals_.size() * sizeof(value_t) + 7) / 8;
}

}  // namespace leva
