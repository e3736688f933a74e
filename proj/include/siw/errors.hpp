#pragma once

#include <stdexcept>
#include <string>

namespace siw {

// Error codes shared across the library. CLI maps NotDecomposable -> exit 2,
// PrecisionExhausted -> exit 3, MalformedInput -> exit 4.
enum class errc {
  descriptor_mismatch,
  division_by_zero_at_precision,
  indistinguishable_from_zero,
  unsupported_ring,
  zero_residue,
  not_a_subring,
  cap_mismatch,
  not_in_disk,
  level_zero,
  not_reversible,
  zero_at_precision,
  lambda_exceeds_cap,
  non_convergent,
  stage_lambda_exceeds_cap,
  not_preparable,
  precision_exhausted,
  not_decomposable,
  singular_at_level,
  integrality_violation,
  malformed_input,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::descriptor_mismatch: return "DescriptorMismatch";
    case errc::division_by_zero_at_precision: return "DivisionByZeroAtPrecision";
    case errc::indistinguishable_from_zero: return "IndistinguishableFromZero";
    case errc::unsupported_ring: return "UnsupportedRing";
    case errc::zero_residue: return "ZeroResidue";
    case errc::not_a_subring: return "NotASubring";
    case errc::cap_mismatch: return "CapMismatch";
    case errc::not_in_disk: return "NotInDisk";
    case errc::level_zero: return "LevelZero";
    case errc::not_reversible: return "NotReversible";
    case errc::zero_at_precision: return "ZeroAtPrecision";
    case errc::lambda_exceeds_cap: return "LambdaExceedsCap";
    case errc::non_convergent: return "NonConvergent";
    case errc::stage_lambda_exceeds_cap: return "StageLambdaExceedsCap";
    case errc::not_preparable: return "NotPreparable";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::not_decomposable: return "NotDecomposable";
    case errc::singular_at_level: return "SingularAtLevel";
    case errc::integrality_violation: return "IntegralityViolation";
    case errc::malformed_input: return "MalformedInput";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace siw
