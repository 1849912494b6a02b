#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vdw::cli {

// Exit codes: 0 success, 1 usage or config error, 2 resource or budget error, 3 invariant failure
// (including a failed verify suite).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitInvariant = 3;

// args excludes the program name. JSON lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vdw::cli
