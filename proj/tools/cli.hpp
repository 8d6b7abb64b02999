#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akchar::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2 };

/// Runs the akchar command line. args excludes the program name.
/// Documents go to out (unless --out is given), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akchar::cli
