#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanloc {

/// Runs one CLI invocation. args excludes the program name.
/// Returns 0 on success, 1 on verification failure, 2 on usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spanloc
