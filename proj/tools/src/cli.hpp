#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace argkb::cli {

enum Exit : int { kHolds = 0, kFails = 1, kError = 2, kCapExceeded = 3 };

/// Runs one command line (without the program name) and returns the exit
/// status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argkb::cli
