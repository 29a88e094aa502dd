#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqleg::cli {

/// Runs one CLI invocation. `args` excludes the program name. The rendered
/// envelope goes to `out` (or the file named by --out); diagnostics go to
/// `err`. Returns 0 when the property held, 1 when it was violated
/// (counterexample found, hypothesis false, open audit rows), 2 on usage or
/// validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqleg::cli
