#pragma once

#include <stdexcept>
#include <string>

namespace geomed {

enum class ErrorCode {
  MismatchedManifolds,
  AntipodalPoints,
  StepTooLongOnSphere,
  DegenerateVertex,
  PointOutsideBall,
  InvalidBounds,
  OutOfRange,
  SigmaNotBelowRho,
  InvalidMeasure,
  ConditionStarFails,
  DimensionTooLargeForOracle,
  InvalidConfig,
  ScheduleViolatesBetaFloor,
  NonConformingSequence,
  ZeroSubgradient,
  TauNonpositive,
  ScheduleMismatch,
  NonEuclidean,
  StuckOnAtom,
  NotCollinear,
  DimensionTooLarge,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// All library failures throw this; `code()` identifies the contract that was
/// violated so callers and tests can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace geomed
