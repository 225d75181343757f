#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sidon {

enum class ErrorCode {
  InvalidArgument,
  Overflow,
  NonSquare,
  SingularBasis,
  DimensionMismatch,
  InvalidGroup,
  GroupMismatch,
  ElementNotInGroup,
  CardinalityOverflow,
  NotGenerating,
  NotABhSet,
  NotAPacking,
  NotAnHBasis,
  NotACovering,
  DegenerateRounding,
  BudgetExceeded,
  UnsupportedParameters,
  UnsupportedDimension,
  ConstructionInvalid,
  ParseError,
  CatalogMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sidon
