#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehn::cli {

// Dispatch one command line (without argv[0]).  Exit codes: 0 success (and,
// for verify/sweep, an empty survivor list), 1 survivor found, 2 usage or
// validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehn::cli
