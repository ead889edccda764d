#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpt {

enum class ErrorCode {
  kOverlapSegments,
  kParseError,
  kDuplicateId,
  kUnknownVertex,
  kUnknownId,
  kInvalidDrawing,
  kSizeOutOfRange,
  kGenerationFailed,
  kBudgetExceeded,
  kKCrossingPresent,
  kPartialOrderViolation,
  kNotAllCrossing,
  kCoincidentCrossings,
  kNotGrounded,
  kHitBudget,
  kInvalidArgument,
  kIoError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code and, where the failure has a
/// concrete certificate (a crossing clique, an offending pair), the ids of
/// the objects involved.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

}  // namespace qpt
