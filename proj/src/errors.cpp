#include "gemkit/errors.hpp"

namespace gemkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::LabelingInvalid: return "LabelingInvalid";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotAdjacencyPreserving: return "NotAdjacencyPreserving";
    case ErrorKind::NonUniformFiber: return "NonUniformFiber";
    case ErrorKind::InvalidVoltage: return "InvalidVoltage";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace gemkit
