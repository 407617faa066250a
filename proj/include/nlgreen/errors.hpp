#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlgreen {

enum class ErrorCode {
  InvalidArgument,
  PoleProximity,      // tan evaluated inside the guard band of an asymptote
  PoleInInterval,     // closed-form tan potential over an interval holding a pole
  AsymptoteInDomain,  // tan kernel quadrature region contains a pole
  ToleranceNotMet,
  BlowUp,
  StepUnderflow,
  OutOfRange,
  DomainError,
  NonConvergence,
  PoleArgument,       // digamma at a non-positive integer
  TooCloseToKink,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library. Pole-related failures carry the
// offending pole coordinates so callers (and the CLI) can report them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<double> poles = {})
      : std::runtime_error(what), code_(code), poles_(std::move(poles)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<double>& poles() const noexcept { return poles_; }

 private:
  ErrorCode code_;
  std::vector<double> poles_;
};

}  // namespace nlgreen
