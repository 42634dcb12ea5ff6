#include "critnum/error.hpp"

namespace critnum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::InvalidH: return "InvalidH";
    case ErrorCode::InvalidS: return "InvalidS";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::OutsideTheoremDomain: return "OutsideTheoremDomain";
    case ErrorCode::OutsideValidatedDomain: return "OutsideValidatedDomain";
    case ErrorCode::WrongGroupClass: return "WrongGroupClass";
    case ErrorCode::ConstructionInvariantViolated: return "ConstructionInvariantViolated";
    case ErrorCode::QuotientUnavailable: return "QuotientUnavailable";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace critnum
