#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symrep {

/// Runs one CLI invocation (arguments without the program name) against the
/// given streams.  Exit codes: 0 success, 1 usage, 2 domain error,
/// 3 verification mismatch, 4 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace symrep
