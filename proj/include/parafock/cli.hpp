#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parafock::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args[0] is the program name. Results go to `out`
/// (or the --output file), diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
/// Same, bound to std::cout / std::cerr.
int run(const std::vector<std::string>& args);

}  // namespace parafock::cli
