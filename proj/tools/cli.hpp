#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biord::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitLeft = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitNoFixedPoint = 4;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;

/// Runs the tool on `args` (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biord::cli
