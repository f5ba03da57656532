#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphoid::cli {

// Exit codes.
inline constexpr int kAffirmative = 0;  // separated / derivable / I-map / check passed
inline constexpr int kNegative = 1;     // the opposite verdict
inline constexpr int kUsageError = 2;   // bad flags, unparsable files, invalid queries
inline constexpr int kLimitRefusal = 3; // a resource guard declined to run

// Runs one command. Verdict output goes to `out`, diagnostics to `err`;
// `args` excludes the program name. Output is deterministic given
// identical arguments, files, and seed.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace graphoid::cli
