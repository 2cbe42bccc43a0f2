#include "qdiscord/errors.hpp"

namespace qdiscord {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::trace_not_one: return "TraceNotOne";
    case ErrorCode::not_positive_semidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::family_invariant_violation: return "FamilyInvariantViolation";
    case ErrorCode::kets_not_orthonormal: return "KetsNotOrthonormal";
    case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
    case ErrorCode::domain_error: return "DomainError";
  }
  return "UnknownError";
}

}  // namespace qdiscord
