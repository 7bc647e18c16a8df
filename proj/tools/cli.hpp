#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gemkit::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. "-" as a file argument reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gemkit::cli
