#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicat::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Runs one invocation; args excludes the program name. Documents go to
/// out, diagnostics to err. stdin is read when --input is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicat::cli
