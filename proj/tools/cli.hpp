#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossfam::cli {

enum ExitCode : int {
  kPass = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kConstructionFailed = 3,
  kResourceLimit = 4,
};

/// Runs the command line (args[0] is the program name) and returns the exit
/// code. Documents, reports and SVG go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossfam::cli
