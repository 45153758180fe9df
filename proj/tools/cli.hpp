#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphlin::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kIllFormed = 2 };

/// Runs the command line `args` (without the program name). "-" paths read
/// from `in` or write to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace graphlin::cli
