#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace btzotto::cli {

/// Exit codes of the btz-otto front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNumerical = 1,
  kExitUsage = 2,
};

/// Runs one btz-otto invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btzotto::cli
