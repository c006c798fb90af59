#pragma once

namespace discenv {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 configuration error, 2 infeasible input, 3 numerical failure.
int run_cli(int argc, char** argv);

} // namespace discenv
