#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "backbone/registry.hpp"

namespace bb::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kMethod = 3 };

/// Runs one command line (without the program name). Data goes to files or
/// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Registry& registry = Registry::builtin());

}  // namespace bb::cli
