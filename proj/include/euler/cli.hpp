#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euler {

/// Batch front end over the solvers and instance generators. args holds the
/// words after the program name. Results go to out, diagnostics to err.
///
/// Exit codes: 0 yes (or plain success for reduce / thresholds), 1 no or
/// no-with-confidence, 2 inconclusive, 64 usage error, 65 unreadable or
/// invalid input data.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace euler
