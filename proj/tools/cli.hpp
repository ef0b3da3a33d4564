#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace demishuffle::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is one of the exit codes
/// above. Identical invocations produce byte-identical output.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace demishuffle::cli
