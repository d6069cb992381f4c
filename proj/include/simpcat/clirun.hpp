#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simpcat {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 all checks passed, 1 a property failed (counterexample in
/// the certificate), 2 malformed input or usage.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace simpcat
