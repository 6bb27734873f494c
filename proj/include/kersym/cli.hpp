// Command-line front end. `kersym <verb> [options]`.
//
// Exit codes:
//   0  success, or a check that returned true
//   1  a check (member, verify1, verify2) returned false
//   2  bad arguments, unreadable or malformed input
//   3  a precondition failed (not in a kernel, maps not surjective, kernel
//      pairs do not commute); the failed hypothesis is named on stderr
//   4  internal error (a rewriting invariant failed)

#ifndef KERSYM_CLI_HPP_
#define KERSYM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "kersym/error.hpp"

namespace kersym::cli {

  enum ExitCode : int {
    exit_ok           = 0,
    exit_false        = 1,
    exit_bad_input    = 2,
    exit_precondition = 3,
    exit_internal     = 4
  };

  [[nodiscard]] int exit_code_for(ErrorCode code) noexcept;

  // args excludes the program name. `--cert -` reads the certificate from in.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace kersym::cli

#endif  // KERSYM_CLI_HPP_
