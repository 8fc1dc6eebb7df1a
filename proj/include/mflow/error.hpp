#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mflow {

enum class ErrorCode {
  SpaceMismatch,
  InvalidArgument,
  BoundOrderViolation,
  NegativeCapacity,
  NegativeMeasure,
  PartitionInvalid,
  NonIntegerCost,
  SameEndpoints,
  MassMismatch,
  NotProbability,
  NotAcyclic,
  NotPseudometric,
  NotSymmetric,
  NegativeEpsilon,
  NotErgodicCirculation,
  Decomposable,
  EmptyTarget,
  ExtractFailure,
  TooLarge,
  DensityOutOfRange,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mflow
