#pragma once

#include <stdexcept>
#include <string>

namespace connmod {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  OrderMismatch,
  SingularLinearPart,
  SymmetryViolation,
  InsufficientOrder,
  UnbalancedVariance,
  ResourceCap,
  InternalMismatch,
  ParseError,
};

const char *error_code_name(ErrorCode code) noexcept;

// Single exception type for the core; the C API maps `code()` onto status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace connmod
