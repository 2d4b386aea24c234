#pragma once

#include "galrep/cli/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galrep::cli {

struct RunOutcome {
    int exit_code = exit_ok;
    std::optional<Report> report;  // absent on usage errors and --help
    std::string out;               // rendered report or help text
    std::string err;
};

/// Executes one command line (without the program name).
RunOutcome run(const std::vector<std::string>& args);

/// Maps library error kinds to exit codes: budget and cap overruns are
/// undetermined, everything else is a usage error.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace galrep::cli
