#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vdw {

enum class ErrorCode {
  kInvalidArgument,
  kGroupTooLarge,
  kTrivialGroup,
  kNotTransitive,
  kDegreeTooLarge,
  kIdentityElement,
  kNotPrime,
  kDegreeTooSmall,
  kCharacteristicTooSmall,
  kSubsetSumZero,
  kToleranceUnreachable,
  kTooLarge,
  kReducible,
  kDegreeOutOfRange,
  kRamifiedOnly,
  kBudgetExceeded,
  kUnknownGroup,
  kInsufficientData,
  kZeroCount,
  kDivisionByZero,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Resource errors map to CLI exit code 2, invariant violations to 3, the rest to 1.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace vdw
