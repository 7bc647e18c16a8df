#include "gemkit/code_file.hpp"

#include <istream>

namespace gemkit {

std::vector<CodeRecord> read_code_records(std::istream& in) {
  std::vector<CodeRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    CodeRecord record;
    record.line = number;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      record.code = line;
    } else {
      record.name = line.substr(0, tab);
      record.code = line.substr(tab + 1);
    }
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace gemkit
