#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricss::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kProtocol = 3;

// Runs one command line (args[0] is the program name). Normal output goes to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricss::cli
