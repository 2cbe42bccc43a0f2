#pragma once

#include <stdexcept>
#include <string>

namespace qdiscord {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  not_hermitian,
  trace_not_one,
  not_positive_semidefinite,
  no_convergence,
  not_normalized,
  family_invariant_violation,
  kets_not_orthonormal,
  unsupported_dimension,
  domain_error,
};

const char* error_code_name(ErrorCode code);

/// All library failures carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace qdiscord
