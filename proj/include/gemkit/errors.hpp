#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gemkit {

enum class ErrorKind {
  InvalidGraph,
  BadLength,
  BadChar,
  NotInvolution,
  NotBipartite,
  LabelingInvalid,
  NotConnected,
  NotAdjacencyPreserving,
  NonUniformFiber,
  InvalidVoltage,
  NoSolution,
  CapExceeded,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class GemError : public std::runtime_error {
 public:
  GemError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gemkit
