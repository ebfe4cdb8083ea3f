#pragma once

// In-process entry point of the `wpdid` tool so tests can drive it without
// spawning processes.
//
// Exit codes: 0 success (check: identifiable), 1 invalid input or failure,
// 2 check found the layout unidentifiable, 3 check found it only boundary
// identifiable. Documents go to `out`; diagnostics go to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace wpdid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnidentifiable = 2;
inline constexpr int kExitBoundary = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpdid::cli
