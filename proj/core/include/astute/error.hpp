#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace astute {

enum class ErrorKind {
  InvalidArgument,
  NotInvertible,
  LeadingNotInvertible,
  CompositeModulus,
  BudgetExceeded,
  NonIntegerResult,
  PreconditionViolated,
  Inconclusive,
  NotPcrOrbit,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// command-line tool can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::LeadingNotInvertible: return "LeadingNotInvertible";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::NotPcrOrbit: return "NotPcrOrbit";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace astute
