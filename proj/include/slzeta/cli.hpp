#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slzeta::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line. argv[0] is the program name. Normal output goes to
/// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace slzeta::cli
