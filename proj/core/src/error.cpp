#include "toricmld/error.hpp"

namespace toricmld {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotAFan: return "NotAFan";
    case ErrorCode::NotInSupport: return "NotInSupport";
    case ErrorCode::ConeNotInFan: return "ConeNotInFan";
    case ErrorCode::NotRCartier: return "NotRCartier";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::NotSpecialization: return "NotSpecialization";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace toricmld
