#pragma once

// Command-line front end: subcommands run, map, compare.

namespace inquest {

// Parses argv, executes the subcommand, and returns the process exit
// status. All diagnostics go to stderr; output files are written
// atomically (write to temp, then rename).
int run_cli(int argc, const char* const* argv);

}  // namespace inquest
