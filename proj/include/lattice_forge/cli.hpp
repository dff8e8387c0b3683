#ifndef LATTICE_FORGE_CLI_HPP
#define LATTICE_FORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lattice_forge::cli {

// Runs the command line given as arguments (without the program name).
// Exit codes: 0 success (undetermined verdicts set a report flag), 1 domain
// error, 2 usage error.  All output is deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lattice_forge::cli

#endif
