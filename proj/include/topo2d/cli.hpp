#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topo2d {

/// Runs the command line with `args` (program name excluded). Returns 0 on
/// success, 1 on verification/audit/I-O failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topo2d
