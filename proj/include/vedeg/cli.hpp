#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vedeg {

/// Runs the command line. Exit code 0 on success, 1 on input error, 2 on
/// verification failure. Data goes to `out`, diagnostics to `err`.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace vedeg
