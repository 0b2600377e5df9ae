#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lex2vec/embedding.hpp"

namespace lex2vec {

NormalizedEmbeddingTable make_normalized_unchecked(EmbeddingTable table);

namespace detail {

// Splits on runs of spaces and tabs; a trailing '\r' is treated as whitespace.
std::vector<std::string_view> split_whitespace(std::string_view line);

std::vector<std::string_view> split_char(std::string_view line, char sep);

std::string_view strip_cr(std::string_view line);

std::string ascii_lower(std::string_view s);

}  // namespace detail
}  // namespace lex2vec
