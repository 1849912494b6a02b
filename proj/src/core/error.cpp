#include "vdw/core/error.hpp"

namespace vdw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kGroupTooLarge: return "GroupTooLarge";
    case ErrorCode::kTrivialGroup: return "TrivialGroup";
    case ErrorCode::kNotTransitive: return "NotTransitive";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kIdentityElement: return "IdentityElement";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kCharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::kSubsetSumZero: return "SubsetSumZero";
    case ErrorCode::kToleranceUnreachable: return "ToleranceUnreachable";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kReducible: return "Reducible";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kRamifiedOnly: return "RamifiedOnly";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnknownGroup: return "UnknownGroup";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kZeroCount: return "ZeroCount";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) {
  return code == ErrorCode::kGroupTooLarge || code == ErrorCode::kDegreeTooLarge ||
         code == ErrorCode::kTooLarge || code == ErrorCode::kBudgetExceeded;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace vdw
