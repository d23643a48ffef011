/**
 * @file cli.hpp
 * @brief Command-line front end (the `merton` executable).
 *
 * Subcommands: validate, analytic, plan, simulate, backtest, compare.
 * Every subcommand writes its tables plus summary.json and manifest.json
 * into --out. summary.json and the tables depend only on (spec, flags,
 * seed); timings live in manifest.json.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace merton::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kSolver = 3,
    kIo = 4,
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Build identifier recorded in manifests (git describe at configure time).
std::string version();

}  // namespace merton::cli
