#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normexp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kScheduleError = 3,
  kIoError = 4,
};

/// Runs the command line `args` (without the program name). Data that has no
/// --output path goes to `out`; stdin-style input comes from `in`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace normexp::cli
