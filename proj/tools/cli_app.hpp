#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "depolar/oracle.hpp"

namespace depolar::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Parses "1/4", "0.25" or "1" into an exact rational in [0,1].
ExactScalar parse_probability(const std::string& text);

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depolar::cli
