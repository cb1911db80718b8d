#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jrp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagree = 2;

/// Runs one command. args excludes the program name. Normal output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jrp::cli
