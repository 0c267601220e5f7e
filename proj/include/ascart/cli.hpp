#ifndef ASCART_CLI_HPP
#define ASCART_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ascart {

/// Parses and dispatches one invocation. args excludes the program name.
/// Returns 0 on success, 1 on invalid input, 2 on verification failure
/// (family non-attainment, failed conjecture cell, witness recheck
/// mismatch, or a broken internal invariant). JSON/CSV goes to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ascart

#endif
