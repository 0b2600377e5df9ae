#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "internal.hpp"
#include "lex2vec/error.hpp"

namespace lex2vec {

namespace detail {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> split_char(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace detail

EmbeddingTable::EmbeddingTable(std::vector<std::string> vocabulary,
                               std::vector<double> values, std::size_t dim_count)
    : vocabulary_(std::move(vocabulary)), values_(std::move(values)), dim_count_(dim_count) {
  if (vocabulary_.empty()) throw Error(ErrorKind::EmptyInput, "embedding table has no words");
  if (dim_count_ == 0) throw Error(ErrorKind::EmptyInput, "embedding table has no dimensions");
  if (values_.size() != vocabulary_.size() * dim_count_) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(vocabulary_.size() * dim_count_) +
                    " values, got " + std::to_string(values_.size()));
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(vocabulary_.size());
  for (const auto& w : vocabulary_) {
    if (!seen.insert(w).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate word '" + w + "'");
    }
  }
}

NormalizedEmbeddingTable NormalizedEmbeddingTable::from_unit_interval(EmbeddingTable table) {
  for (double v : table.values()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  "value " + std::to_string(v) + " lies outside [0,1]");
    }
  }
  return NormalizedEmbeddingTable(std::move(table));
}

NormalizedEmbeddingTable make_normalized_unchecked(EmbeddingTable table) {
  return NormalizedEmbeddingTable(std::move(table));
}

namespace {

bool is_positive_integer(std::string_view tok) {
  if (tok.empty()) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  return tok.find_first_not_of('0') != std::string_view::npos;
}

std::size_t to_size(std::string_view tok) {
  std::size_t v = 0;
  std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return v;
}

bool parse_double(std::string_view tok, double& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

EmbeddingFormat detect_format(std::string_view first_line) {
  auto tokens = detail::split_whitespace(first_line);
  if (tokens.size() == 2 && is_positive_integer(tokens[0]) && is_positive_integer(tokens[1])) {
    return EmbeddingFormat::Word2VecText;
  }
  return EmbeddingFormat::GloVeText;
}

EmbeddingTable parse_embeddings(std::istream& in, EmbeddingFormat format, ParseStats* stats) {
  std::vector<std::string> vocabulary;
  std::vector<double> values;
  std::unordered_set<std::string> seen;
  std::size_t dim_count = 0;
  std::size_t header_vocab = 0;
  std::size_t header_dims = 0;
  std::size_t data_lines = 0;
  std::size_t duplicates = 0;
  bool header_pending = format != EmbeddingFormat::GloVeText;
  bool has_header = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_whitespace(line);
    if (tokens.empty()) continue;

    if (header_pending) {
      header_pending = false;
      if (format == EmbeddingFormat::Auto) format = detect_format(line);
      if (format == EmbeddingFormat::Word2VecText) {
        if (tokens.size() != 2 || !is_positive_integer(tokens[0]) ||
            !is_positive_integer(tokens[1])) {
          throw Error(ErrorKind::MalformedLine,
                      "expected a '<vocab_size> <dim_count>' header", line_no);
        }
        header_vocab = to_size(tokens[0]);
        header_dims = to_size(tokens[1]);
        has_header = true;
        continue;
      }
    }

    if (tokens.size() < 2) {
      throw Error(ErrorKind::MalformedLine, "line has a word but no values", line_no);
    }
    const std::size_t dims = tokens.size() - 1;
    if (dim_count == 0) {
      dim_count = dims;
      if (has_header && header_dims != dim_count) {
        throw Error(ErrorKind::DimensionMismatch,
                    "header declares " + std::to_string(header_dims) +
                        " dimensions but data has " + std::to_string(dim_count),
                    line_no);
      }
    } else if (dims != dim_count) {
      throw Error(ErrorKind::MalformedLine,
                  "expected " + std::to_string(dim_count) + " values, got " +
                      std::to_string(dims),
                  line_no);
    }

    ++data_lines;
    std::string word(tokens[0]);
    if (seen.contains(word)) {
      // Validate the numbers anyway so a bad duplicate still reports its line.
      double scratch;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (!parse_double(tokens[k], scratch)) {
          throw Error(ErrorKind::MalformedLine,
                      "unparseable number '" + std::string(tokens[k]) + "'", line_no);
        }
      }
      ++duplicates;
      continue;
    }
    values.reserve(values.size() + dim_count);
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      double v;
      if (!parse_double(tokens[k], v)) {
        throw Error(ErrorKind::MalformedLine,
                    "unparseable number '" + std::string(tokens[k]) + "'", line_no);
      }
      values.push_back(v);
    }
    seen.insert(word);
    vocabulary.push_back(std::move(word));
  }

  if (vocabulary.empty()) throw Error(ErrorKind::EmptyInput, "no embedding lines found");
  if (has_header && header_vocab != data_lines) {
    throw Error(ErrorKind::DimensionMismatch,
                "header declares " + std::to_string(header_vocab) + " words but data has " +
                    std::to_string(data_lines));
  }
  if (stats) stats->duplicates_skipped = duplicates;
  return EmbeddingTable(std::move(vocabulary), std::move(values), dim_count);
}

void emit_embeddings(std::ostream& out, const EmbeddingTable& table, EmbeddingFormat format,
                     std::optional<int> significant_digits) {
  if (format == EmbeddingFormat::Word2VecText) {
    out << table.size() << ' ' << table.dim_count() << '\n';
  }
  char buf[64];
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.vocabulary()[i];
    for (double v : table.row(i)) {
      auto res = significant_digits
                     ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general,
                                     *significant_digits)
                     : std::to_chars(buf, buf + sizeof buf, v);
      out << ' ';
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

}  // namespace lex2vec
