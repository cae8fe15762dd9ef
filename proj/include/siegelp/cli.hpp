#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace siegelp::cli {

enum ExitCode : int {
    kPass = 0,
    kIdentityFailure = 1,
    kUsage = 2,
    kPrecondition = 3,
};

/// Runs the command line front end; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace siegelp::cli
