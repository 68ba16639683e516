#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetapath {

// Exit statuses follow the conventional ranges so the tool scripts cleanly.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitResourceLimit = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

// Parses argv (program name excluded) and dispatches to the library.
// Streams are injected so the whole CLI is testable in-process.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace thetapath
