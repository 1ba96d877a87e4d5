#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mnhd {

enum class ErrorCode {
  // graph-core
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  TooFewVertices,
  Disconnected,
  // designs
  InvalidDesign,
  NotUniform,
  NotBalanced,
  ReplicationVaries,
  DegenerateDesign,
  DegenerateDLambda,
  // spectral
  NonSymmetric,
  NoConvergence,
  AmbiguousGap,
  RepeatedEigenvalue,
  MixedRadicands,
  DivisionByZero,
  NoCaseMatches,
  // heat
  NegativeTime,
  SameVertex,
  // mnhd
  UnknownSignature,
  NotFourEigenvalues,
  // io
  InvalidRadicand,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure
/// and what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mnhd
