#include "lex2vec/error.hpp"

namespace lex2vec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::MalformedLexiconLine: return "MalformedLexiconLine";
    case ErrorKind::UnknownCategoryId: return "UnknownCategoryId";
    case ErrorKind::MissingDelimiter: return "MissingDelimiter";
    case ErrorKind::InvalidTheta: return "InvalidTheta";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoNamedDimensions: return "NoNamedDimensions";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(to_string(kind));
  if (line) out += " at line " + std::to_string(*line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(kind, message, line)),
      kind_(kind),
      line_(line) {}

}  // namespace lex2vec
