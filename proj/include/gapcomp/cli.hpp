#ifndef GAPCOMP_CLI_HPP
#define GAPCOMP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gapcomp::cli {

enum ExitCode : int {
    kOk = 0,
    /// An identity or inverse relation failed to hold.
    kIdentityViolated = 1,
    /// Bad flags, bad input file, or a request outside a precondition.
    kUsage = 2,
};

/// Runs the command line with args[0] as the program name; all output goes to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gapcomp::cli

#endif // GAPCOMP_CLI_HPP
