#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p5sparse::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kCapExceeded = 2, kInternalError = 3 };

/// Oracle cross-checks in `recognize` run up to this order unless forced.
inline constexpr int kOracleCheckMaxOrder = 30;

/// Runs one command line (args excludes the program name). Reports go to
/// out as newline-delimited JSON envelopes, diagnostics to err; graph input
/// is read from the named file or, when absent or "-", from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace p5sparse::cli
