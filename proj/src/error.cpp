#include "mlcd/error.hpp"

namespace mlcd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::UnknownLayer: return "UnknownLayer";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::InconsistentTable: return "InconsistentTable";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::EmptyNetwork: return "EmptyNetwork";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(message), kind_(kind), line_(line) {}

}  // namespace mlcd
