#include "flatorus/error.hpp"

namespace flatorus {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::singular_basis: return "SingularBasis";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
    case ErrorCode::not_a_lattice_vector: return "NotALatticeVector";
    case ErrorCode::not_same_coset_pair: return "NotSameCosetPair";
    case ErrorCode::weight_order_violation: return "WeightOrderViolation";
    case ErrorCode::not_a_multiple: return "NotAMultiple";
    case ErrorCode::non_termination: return "NonTermination";
    case ErrorCode::superbasis_invalid: return "SuperbasisInvalid";
    case ErrorCode::decomposition_failed: return "DecompositionFailed";
    case ErrorCode::zero_contraction_point: return "ZeroContractionPoint";
    case ErrorCode::empty_factor_list: return "EmptyFactorList";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::internal_consistency: return "InternalConsistency";
    case ErrorCode::input_error: return "InputError";
    case ErrorCode::verification_failed: return "VerificationFailed";
  }
  return "UnknownError";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::unsupported_dimension:
      return ErrorCategory::dimension;
    case ErrorCode::verification_failed:
      return ErrorCategory::verification;
    case ErrorCode::internal_consistency:
    case ErrorCode::non_termination:
      return ErrorCategory::internal;
    default:
      return ErrorCategory::input;
  }
}

}  // namespace flatorus
