#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpsurf {

enum class ErrorKind {
  // malformed input
  InvalidBand,
  InvalidParameter,
  InvalidGraph,
  MalformedDocument,
  // precondition violations
  NotPositive,
  NotQuasipositive,
  NotFull,
  SiteNotEligible,
  HasFreeEnds,
  NotOnQ,
  NotReducible,
  CycleEnumerationBudgetExceeded,
  // internal consistency failures
  FiberVerificationFailed,
  SummaryMismatch,
  NonExactDivision,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidBand: return "InvalidBand";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotQuasipositive: return "NotQuasipositive";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::SiteNotEligible: return "SiteNotEligible";
    case ErrorKind::HasFreeEnds: return "HasFreeEnds";
    case ErrorKind::NotOnQ: return "NotOnQ";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::CycleEnumerationBudgetExceeded: return "CycleEnumerationBudgetExceeded";
    case ErrorKind::FiberVerificationFailed: return "FiberVerificationFailed";
    case ErrorKind::SummaryMismatch: return "SummaryMismatch";
    case ErrorKind::NonExactDivision: return "NonExactDivision";
  }
  return "Unknown";
}

/// Process exit code for an error: 1 malformed input, 2 precondition
/// violation, 3 internal consistency failure.
constexpr int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidBand:
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidGraph:
    case ErrorKind::MalformedDocument:
      return 1;
    case ErrorKind::FiberVerificationFailed:
    case ErrorKind::SummaryMismatch:
    case ErrorKind::NonExactDivision:
      return 3;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qpsurf
