#ifndef INCRTREE_CLI_HPP
#define INCRTREE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace incrtree::cli {

enum ExitCode : int {
    kOk = 0,
    kSelfcheckFailed = 1,
    kParseError = 2,
    kNotConnected = 3,
    kSizeBound = 4,
};

/// Runs `incrtree <command> [flags] <graphfile>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incrtree::cli

#endif
