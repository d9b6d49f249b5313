#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linknav {

enum class ErrorCode {
  InvalidInput,
  NonPositiveLength,
  TriangleInequalityViolated,
  NonGeneric,
  NotAPartition,
  InadmissibleVertex,
  InadmissibleEdge,
  IllegalMoveWouldEmptyPart,
  IllegalMoveDestinationLong,
  IllegalMoveMalformed,
  TooLarge,
  UnknownVertex,
  NoPath,
  NotABow,
  Disconnected,
  NormalizationFailed,
  InternalBoundViolation,
  InvalidStep,
  ConvexityLost,
  DegenerateDirection,
  NoCut,
  HomotopyStalled,
  LengthMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. The code is stable and is
/// what the CLI maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input could not be parsed or violates a structural precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A planning request has no solution (different components, not a bow, ...).
class PlanningError : public Error {
 public:
  using Error::Error;
};

/// A floating-point procedure failed to meet its tolerances.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A proven step bound was exceeded. Always a defect.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace linknav
