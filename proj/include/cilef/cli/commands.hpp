#pragma once

#include <ostream>

namespace cilef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitAnomaly = 2;

/// Entry point of the cilef tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cilef::cli
