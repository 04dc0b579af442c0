#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zonotile {

// Runs one subcommand (args exclude the program name) and writes a JSON
// report with a "verdict" field to out. Returns 0 on success, 1 when a
// check comes out false, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zonotile
