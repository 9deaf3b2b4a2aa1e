#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tclique {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

// Runs the `tclique` command line. args[0] is the program name. Machine
// output goes to `out` (unless redirected to a file), diagnostics to `err`.
// Reading from "-" uses std::cin.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tclique
