#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one job. The report goes to --out when given, otherwise to `out`;
/// diagnostics go to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as above with argv[1..] given as strings.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thv::cli
