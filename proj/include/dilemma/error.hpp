#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dilemma {

enum class ErrorKind {
  RejectsNTooSmall,
  RejectsDConstraint,
  RejectsCostOrder,
  RejectsIntegerRatio,
  OutOfRangeK,
  OutOfRangeM,
  OutOfRangeT,
  LengthMismatch,
  NegativeGamma,
  DegenerateDenominator,
  IndexOutOfRange,
  InvalidType,
  NonConvergence,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RejectsNTooSmall: return "RejectsNTooSmall";
    case ErrorKind::RejectsDConstraint: return "RejectsDConstraint";
    case ErrorKind::RejectsCostOrder: return "RejectsCostOrder";
    case ErrorKind::RejectsIntegerRatio: return "RejectsIntegerRatio";
    case ErrorKind::OutOfRangeK: return "OutOfRangeK";
    case ErrorKind::OutOfRangeM: return "OutOfRangeM";
    case ErrorKind::OutOfRangeT: return "OutOfRangeT";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NegativeGamma: return "NegativeGamma";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

/// Every recoverable failure in the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code and a name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dilemma
