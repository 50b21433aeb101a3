#pragma once

namespace rankfill {

// Entry point for the `rankfill` command-line tool; argv[0] is the program
// name. Returns the process exit code (0 success, 1 runtime failure, CLI11
// codes for usage errors).
int run_cli(int argc, const char* const* argv);

}  // namespace rankfill
