#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtoric::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,      // bad flags, unreadable or malformed input
  kInvalidData = 3,     // well-formed input that violates a mathematical precondition
  kDisagreement = 4,    // closed-form answer contradicts an oracle
};

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`; `in` is read when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qtoric::cli
