#pragma once

#include <iosfwd>

namespace sidon::cli {

inline constexpr int kOk = 0;        // success or positive verdict
inline constexpr int kNegative = 1;  // negative verdict
inline constexpr int kUsage = 2;     // usage or data error
inline constexpr int kBudget = 3;    // search budget exhausted

// Runs one command line; results go to `out`, diagnostics to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
