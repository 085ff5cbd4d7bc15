#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pauliray {

// Parses and executes one command line (without the program name).
// Returns 0 when every comparison passed, 1 on failed checks or runtime
// errors, 2 on usage errors.  All normal output goes to `out`, diagnostics
// to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pauliray
