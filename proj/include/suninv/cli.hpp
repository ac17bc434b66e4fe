#ifndef SUNINV_CLI_HPP
#define SUNINV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace suninv {

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out, diagnostics to err. Exit codes: 0 success/pass, 1 failed
/// verification, 2 usage or parse error, 3 capacity error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace suninv

#endif // SUNINV_CLI_HPP
