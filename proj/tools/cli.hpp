#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hetnet::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kConfig = 3,
  kToleranceBreach = 4,
};

/// Full command line including the program name in args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hetnet::cli
