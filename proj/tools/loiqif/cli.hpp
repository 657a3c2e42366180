#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loiqif::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInputError = 2,
    kCapExceeded = 3,
    kWitnessRejected = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loiqif::cli
