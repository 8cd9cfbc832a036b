#pragma once

// The qkz-lab command line driver.

#include <iosfwd>

namespace qkzlab::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kConfigError = 2,
  kPole = 3,
};

/// Runs qkz-lab on argv (argv[0] is the program name). The JSON document
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qkzlab::cli
