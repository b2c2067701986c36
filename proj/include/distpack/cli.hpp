#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distpack {

// Stable process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_timeout = 3;

/// Environment variable read for the default `bench --workers` value.
inline constexpr const char* bench_workers_env = "DISTPACK_BENCH_WORKERS";

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace distpack
