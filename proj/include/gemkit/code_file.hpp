#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gemkit {

// One line of a code file: optional "name<TAB>" prefix, then the code.
struct CodeRecord {
  std::optional<std::string> name;
  std::string code;
  int line = 0;  // 1-based line number in the source
};

// Skips blank lines and lines starting with '#'. Strips a trailing '\r'.
// The code itself is kept verbatim, so stray whitespace reaches the parser
// and is rejected there.
std::vector<CodeRecord> read_code_records(std::istream& in);

}  // namespace gemkit
