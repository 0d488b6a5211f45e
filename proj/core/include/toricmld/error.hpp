#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricmld {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  NotPointed,
  NotSimplicial,
  NotAFan,
  NotInSupport,
  ConeNotInFan,
  NotRCartier,
  CoefficientOutOfRange,
  InvalidPoint,
  NotSpecialization,
  GenerationExhausted,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. Every recoverable failure in
/// the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace toricmld
