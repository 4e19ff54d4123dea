#pragma once

#include <ostream>

namespace orbitfold::cli {

enum ExitCode : int { kPass = 0, kReportFailure = 1, kInputError = 2 };

/// Runs one subcommand. JSON (or the requested format) goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitfold::cli
