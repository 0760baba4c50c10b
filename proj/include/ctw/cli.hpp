#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctw {

// Entry point behind the ctw binary. args excludes the program name.
// Exit codes: 0 success / bound holds, 1 invariant or bound violation
// (machine-readable JSON diagnostic on out), 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ctw
