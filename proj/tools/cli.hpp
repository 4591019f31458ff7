#pragma once

#include <iosfwd>

namespace evenpan::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kHypothesesNotMet = 1;
inline constexpr int kViolation = 2;
inline constexpr int kUsage = 64;      // bad flags or parameters
inline constexpr int kBadInput = 65;   // input digraph does not parse
inline constexpr int kNoInput = 66;    // input file cannot be opened
inline constexpr int kInternal = 70;

/// Runs one invocation. stdout receives the machine-stable result, stderr
/// diagnostics; `in` backs the `-` input path.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace evenpan::cli
