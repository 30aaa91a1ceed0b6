#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monocirc::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    verify_failed = 1,
    usage_error = 2, ///< bad flags, malformed files, arity mismatch
    model_error = 3, ///< request outside the monotone model (e.g. more rows than variables)
    guard_exceeded = 4, ///< oracle enumeration larger than --cap
};

/// Entry point with injectable streams; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monocirc::cli
