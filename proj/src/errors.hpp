#pragma once

#include <stdexcept>
#include <string>

namespace kodaira {

/// Failure categories shared by the C++ core and the C API.
enum class ErrorCode {
  invalid_input,
  zero_inverse,
  dimension_mismatch,
  mixed_degrees,
  overflow,
  budget_exceeded,
  check_failed,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kodaira
