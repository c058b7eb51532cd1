#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gambler::cli {

/// Dispatches one command line (without the program name). Writes results to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 on usage or
/// validation errors, 2 when `verify` finds a failing property.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gambler::cli
