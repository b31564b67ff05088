#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vortex::cli {

// Runs the vortex tool on `args` (without the program name). Reports go to
// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vortex::cli
