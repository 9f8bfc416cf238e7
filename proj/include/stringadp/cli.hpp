#ifndef STRINGADP_CLI_HPP
#define STRINGADP_CLI_HPP

#include <string>
#include <vector>

namespace stringadp {

/// Entry point behind the command-line tool. `args` excludes the program
/// name. Returns 0 on success, 1 when a verified bound is violated, 2 on
/// usage or input errors.
int run_cli(const std::vector<std::string>& args);

} // namespace stringadp

#endif
