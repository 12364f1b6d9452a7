#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedge::cli {

enum ExitCode { ok = 0, verify_failed = 1, usage_error = 2, numeric_failure = 3 };

// args excludes the program name. The artifact goes to `out` unless --output
// names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wedge::cli
