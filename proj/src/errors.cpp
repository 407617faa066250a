#include "nlgreen/errors.hpp"

namespace nlgreen {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::PoleInInterval: return "PoleInInterval";
    case ErrorCode::AsymptoteInDomain: return "AsymptoteInDomain";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::BlowUp: return "BlowUp";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::PoleArgument: return "PoleArgument";
    case ErrorCode::TooCloseToKink: return "TooCloseToKink";
  }
  return "Unknown";
}

}  // namespace nlgreen
