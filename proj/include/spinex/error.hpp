#pragma once

#include <stdexcept>
#include <string>

namespace spinex {

enum class ErrorCode {
  kOk = 0,
  kDomain = 1,
  kDegenerateGeometry = 2,
  kIdenticalSetViolation = 3,
  kInternalConsistency = 4,
  kIo = 5,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying one of the library error categories. The C API maps
/// these one-to-one onto its status codes.
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

}  // namespace spinex
