#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critnum {

enum class ErrorCode {
  InvalidFactor,
  InvalidElement,
  InvalidOrder,
  InvalidIndex,
  SpecMismatch,
  EmptySet,
  InvalidH,
  InvalidS,
  InvalidDivisor,
  OutsideTheoremDomain,
  OutsideValidatedDomain,
  WrongGroupClass,
  ConstructionInvariantViolated,
  QuotientUnavailable,
  ConditionViolated,
  BudgetExceeded,
  ParseError,
  BackendUnavailable,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can report the category verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace critnum
