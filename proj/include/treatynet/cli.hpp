#pragma once

namespace treatynet {

/// Batch front end: audit / communities / sweep / correlate subcommands.
/// Exit codes: 0 success, 2 validation error (bad input or flags), 3 runtime
/// error. Exposed as a function so tests can drive it in-process.
int run_cli(int argc, const char* const* argv);

}  // namespace treatynet
