#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lex2vec {

enum class ErrorKind {
  EmptyInput,
  MalformedLine,
  DimensionMismatch,
  NonFiniteValue,
  MalformedLexiconLine,
  UnknownCategoryId,
  MissingDelimiter,
  InvalidTheta,
  InvalidArgument,
  NoNamedDimensions,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Thrown by every loader and pipeline stage. `line()` is 1-based and only
// set when the failure can be pinned to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace lex2vec
