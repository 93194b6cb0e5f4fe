#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockwitness::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,            // success / condition verified
  kConditionFailed = 1,
  kUsage = 2,         // usage or parse error
  kInternal = 3,      // a mathematical invariant broke; always a bug
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockwitness::cli
