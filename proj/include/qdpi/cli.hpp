#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdpi::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitViolation = 3;

/// Runs the qdpi command line. `args` includes the program name. Primary
/// output goes to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdpi::cli
