#include "kersym/error.hpp"

namespace kersym {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::unknown_generator:
        return "UnknownGenerator";
      case ErrorCode::alphabet_mismatch:
        return "AlphabetMismatch";
      case ErrorCode::parse_error:
        return "ParseError";
      case ErrorCode::format_error:
        return "FormatError";
      case ErrorCode::length_mismatch:
        return "LengthMismatch";
      case ErrorCode::ground_mismatch:
        return "GroundMismatch";
      case ErrorCode::not_in_kernel:
        return "NotInKernel";
      case ErrorCode::not_in_kernel_f:
        return "NotInKernelF";
      case ErrorCode::not_in_kernel_h:
        return "NotInKernelH";
      case ErrorCode::no_completion:
        return "NoCompletion";
      case ErrorCode::not_surjective_f:
        return "NotSurjectiveF";
      case ErrorCode::not_surjective_h:
        return "NotSurjectiveH";
      case ErrorCode::kernel_pairs_do_not_commute:
        return "KernelPairsDoNotCommute";
      case ErrorCode::instance_invalid:
        return "InstanceInvalid";
      case ErrorCode::spec_out_of_bounds:
        return "SpecOutOfBounds";
      case ErrorCode::invariant_violation:
        return "InvariantViolation";
    }
    return "Unknown";
  }

}  // namespace kersym
