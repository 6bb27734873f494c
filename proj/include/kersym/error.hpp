// Error type shared by every kersym module.

#ifndef KERSYM_ERROR_HPP_
#define KERSYM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kersym {

  enum class ErrorCode {
    unknown_generator,
    alphabet_mismatch,
    parse_error,
    format_error,
    length_mismatch,
    ground_mismatch,
    not_in_kernel,
    not_in_kernel_f,
    not_in_kernel_h,
    no_completion,
    not_surjective_f,
    not_surjective_h,
    kernel_pairs_do_not_commute,
    instance_invalid,
    spec_out_of_bounds,
    invariant_violation
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace kersym

#endif  // KERSYM_ERROR_HPP_
