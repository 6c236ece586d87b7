#pragma once

#include <stdexcept>
#include <string>

namespace flatorus {

enum class ErrorCode {
  singular_basis,
  dimension_mismatch,
  unsupported_dimension,
  not_a_lattice_vector,
  not_same_coset_pair,
  weight_order_violation,
  not_a_multiple,
  non_termination,
  superbasis_invalid,
  decomposition_failed,
  zero_contraction_point,
  empty_factor_list,
  division_by_zero,
  internal_consistency,
  input_error,
  verification_failed,
};

const char* error_name(ErrorCode code);

// Process exit codes for the CLI; library errors map onto these.
enum class ErrorCategory { input = 3, dimension = 4, verification = 2, internal = 1 };

ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace flatorus
