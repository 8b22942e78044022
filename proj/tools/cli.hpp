#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgepow::cli {

enum ExitCode : int {
  kSuccess = 0,      // the claim holds / the command completed
  kUsageOrResource = 1,
  kRefuted = 2,      // emitted JSON carries a nonempty refutation field
};

/// Runs one invocation. args excludes the program name. JSON/SVG goes to
/// the --output file when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wedgepow::cli
