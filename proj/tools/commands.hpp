#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxgain::cli {

/// Runs one command line (without the program name) and returns the process exit code:
/// 0 on success, 1 when a verified bound does not hold, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maxgain::cli
