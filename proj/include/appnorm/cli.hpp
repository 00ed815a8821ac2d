#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace appnorm {

// Runs one command line (without the program name). Exit codes: 0 success /
// property holds, 1 property fails (witness on stdout), 2 input error
// (diagnostic JSON on stderr). Output is byte-deterministic for a given
// command, independent of --jobs.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace appnorm
