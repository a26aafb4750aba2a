#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiag::cli {

enum ExitCode { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

/// Runs one `qdiag` command. `args` excludes the program name. Input comes
/// from `-i FILE` or `in`, output goes to `-o FILE` or `out`, diagnostics to
/// `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qdiag::cli
