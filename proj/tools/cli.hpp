#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepenum::cli {

/// Runs one command line (args excludes the program name). JSON goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when the answer is
/// negative or inconclusive (check-class, verify-decomposition) or a stage
/// rejects the input, 2 on usage, parse or size-guard errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepenum::cli
