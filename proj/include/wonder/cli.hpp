#pragma once

#include <iosfwd>

namespace wonder {

/// Exit codes of the command-line tool.
enum ExitCode : int { Ok = 0, ValidationFailure = 1, SchemaError = 2, BudgetExhausted = 3 };

/// Runs the tool on argv, writing artifacts to `out` (or --output) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wonder
