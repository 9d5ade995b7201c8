#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leva {

enum class ErrorCode {
  kMultipleRoots,
  kNoRoot,
  kCycleDetected,
  kParentOutOfRange,
  kNotPlusMinusOne,
  kParseError,
  kInvalidArgument,
};

// Library-wide exception. `detail` carries the offending vertex, array
// position or input line, depending on the code (-1 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::int64_t detail = -1)
      : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }
  std::int64_t detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::int64_t detail_;
};

}  // namespace leva
