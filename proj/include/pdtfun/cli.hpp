#ifndef PDTFUN_CLI_HPP
#define PDTFUN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pdtfun {

// Runs one command. `args` is argv without the program name. Returns the
// process exit status: 0 success, 1 usage or domain errors, 2 resource
// exhaustion.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pdtfun

#endif
