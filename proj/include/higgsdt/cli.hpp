#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace higgsdt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name. Tables go to out,
/// diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace higgsdt
