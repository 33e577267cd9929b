#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mwgames::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNegative = 3;

// Runs one invocation. `args` excludes the program name. Reports go to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwgames::cli
