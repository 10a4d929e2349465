#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chopf::cli {

enum ExitCode : int {
    kSuccess = 0,
    kParseFailure = 1, // syntax, type and domain errors
    kBoundExceeded = 2,
    kVerifyFailure = 3,
    kIoFailure = 4,
};

/// Largest accepted --cap.
inline constexpr int kMaxCap = 40;

/// Runs one command line (without the program name), writing the result
/// document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chopf::cli
