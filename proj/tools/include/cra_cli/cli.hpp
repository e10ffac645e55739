#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cra::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1,
    kUsageError = 2,
    kPreconditionError = 3,
};

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cra::cli
