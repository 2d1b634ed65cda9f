#include "toric_diamond/error.hpp"

namespace toric_diamond {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::UnboundedRegion: return "UNBOUNDED_REGION";
    case ErrorCode::OriginNotInterior: return "ORIGIN_NOT_INTERIOR";
    case ErrorCode::NotFano: return "NOT_FANO";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::InvalidWeights: return "INVALID_WEIGHTS";
    case ErrorCode::DegenerateMatrix: return "DEGENERATE_MATRIX";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NotReduced: return "NOT_REDUCED";
    case ErrorCode::NormalizationImpossible: return "NORMALIZATION_IMPOSSIBLE";
    case ErrorCode::NotAdmissible: return "NOT_ADMISSIBLE";
    case ErrorCode::NotConvex: return "NOT_CONVEX";
    case ErrorCode::NotSpecialSymmetric: return "NOT_SPECIAL_SYMMETRIC";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::InvalidParameter: return "INVALID_PARAMETER";
    case ErrorCode::BoundaryProximity: return "BOUNDARY_PROXIMITY";
    case ErrorCode::NonConvergence: return "NON_CONVERGENCE";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, std::string context)
    : std::runtime_error(message), code_(code), context_(std::move(context)) {}

}  // namespace toric_diamond
