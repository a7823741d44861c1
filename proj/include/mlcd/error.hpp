#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mlcd {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  UnknownNode,
  UnknownLayer,
  AlphaOutOfRange,
  NotAdjacent,
  InconsistentTable,
  EmptyTable,
  EmptyNetwork,
  InvalidParams,
  InvalidConfig,
  DomainMismatch,
  MalformedLine,
  MalformedDocument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `line()` is set for faults that come
/// from a specific line of an input file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace mlcd
