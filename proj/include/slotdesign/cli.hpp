#pragma once

#include <iosfwd>

namespace slotdesign {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error, 2 domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slotdesign
