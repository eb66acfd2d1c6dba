#pragma once

#include <ostream>

namespace synthminer {

enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitUsage = 2, kExitAbort = 3 };

/// Entry point of the `synthminer` tool. Subcommands: discover, order,
/// evaluate, convert. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace synthminer
