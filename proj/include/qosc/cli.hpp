// cli.hpp - command-line entry point, factored out of main() for testing.
#ifndef QOSC_CLI_HPP
#define QOSC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qosc {

/// Runs the CLI on the given argument list (without argv[0]).
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 computation/domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qosc

#endif  // QOSC_CLI_HPP
