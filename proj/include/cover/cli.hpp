#pragma once

// `cover refine|construct|verify|sym|gen`. The entry point is a function so
// that tests can drive the command line in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace cover::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,     // the mathematical answer is "no"
  kParseError = 2,   // bad flags or malformed files
  kInvalidInput = 3, // well-formed input that violates an invariant
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cover::cli
