#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric_diamond {

enum class ErrorCode {
  DegenerateInput,
  UnboundedRegion,
  OriginNotInterior,
  NotFano,
  PreconditionFailed,
  InvalidWeights,
  DegenerateMatrix,
  TooLarge,
  NotReduced,
  NormalizationImpossible,
  NotAdmissible,
  NotConvex,
  NotSpecialSymmetric,
  InternalInconsistency,
  InvalidParameter,
  BoundaryProximity,
  NonConvergence,
  MalformedInput,
};

// Stable machine-readable name, e.g. "NOT_ADMISSIBLE".
std::string_view code_name(ErrorCode code) noexcept;

// All domain failures are reported through this one exception type; the code
// tells callers (and the CLI's exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace toric_diamond
