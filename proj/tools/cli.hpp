#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maedalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInconclusive = 3;

/// Environment variable consulted for the default --workers value.
inline constexpr const char* kWorkersEnv = "MAEDALAB_WORKERS";

/// Runs one command line (args[0] is the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maedalab::cli
