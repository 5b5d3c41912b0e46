#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genlogic::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDataError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genlogic::cli
