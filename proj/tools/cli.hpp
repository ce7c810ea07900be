#ifndef LCDECOMP_TOOLS_CLI_HPP
#define LCDECOMP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lcdecomp::cli {

/// Runs one command line (without the program name). Returns the process exit status:
/// 0 success, 2 validation error, 3 mathematical error, 4 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcdecomp::cli

#endif
