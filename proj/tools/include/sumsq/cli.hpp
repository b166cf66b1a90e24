#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumsq {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // instance outside oracle limits and other runtime failures
  kExitUsage = 2,    // parse errors, unsupported fields, unknown places
  kExitNotPMaximal = 3,
  kExitSearchBound = 4,
};

/// Runs one command line (program name excluded) and returns its exit status.
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a batch line into arguments; single and double quotes group words.
std::vector<std::string> split_arguments(const std::string& line);

}  // namespace sumsq
