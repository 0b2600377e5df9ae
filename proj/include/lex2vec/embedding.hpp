#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lex2vec {

// Vocabulary plus a dense row-major matrix, one row per word.
class EmbeddingTable {
 public:
  // Throws Error(DimensionMismatch) if values.size() != vocabulary.size() *
  // dim_count, Error(EmptyInput) for an empty vocabulary or zero dimensions,
  // and Error(InvalidArgument) on duplicate words.
  EmbeddingTable(std::vector<std::string> vocabulary, std::vector<double> values,
                 std::size_t dim_count);

  std::size_t size() const noexcept { return vocabulary_.size(); }
  std::size_t dim_count() const noexcept { return dim_count_; }
  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  std::span<const double> values() const noexcept { return values_; }

  std::span<const double> row(std::size_t word) const noexcept {
    return std::span<const double>(values_).subspan(word * dim_count_, dim_count_);
  }
  double at(std::size_t word, std::size_t dim) const noexcept {
    return values_[word * dim_count_ + dim];
  }

  friend bool operator==(const EmbeddingTable&, const EmbeddingTable&) = default;

 private:
  std::vector<std::string> vocabulary_;
  std::vector<double> values_;
  std::size_t dim_count_;
};

// An EmbeddingTable whose every value lies in [0,1]. Only produced by
// normalize() or by the checked from_unit_interval().
class NormalizedEmbeddingTable {
 public:
  // Throws Error(InvalidArgument) if any value is outside [0,1] or NaN.
  static NormalizedEmbeddingTable from_unit_interval(EmbeddingTable table);

  const EmbeddingTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::size_t dim_count() const noexcept { return table_.dim_count(); }
  const std::vector<std::string>& vocabulary() const noexcept { return table_.vocabulary(); }
  std::span<const double> row(std::size_t word) const noexcept { return table_.row(word); }
  double at(std::size_t word, std::size_t dim) const noexcept { return table_.at(word, dim); }

  friend bool operator==(const NormalizedEmbeddingTable&,
                         const NormalizedEmbeddingTable&) = default;

 private:
  explicit NormalizedEmbeddingTable(EmbeddingTable table) : table_(std::move(table)) {}
  friend NormalizedEmbeddingTable make_normalized_unchecked(EmbeddingTable);

  EmbeddingTable table_;
};

enum class EmbeddingFormat { Word2VecText, GloVeText, Auto };

// Word2VecText iff the line is exactly two positive integers.
EmbeddingFormat detect_format(std::string_view first_line);

struct ParseStats {
  std::size_t duplicates_skipped = 0;
};

// Reads "<word> v1 ... vD" lines separated by any run of spaces/tabs. Blank
// lines are ignored. Duplicate words keep their first occurrence.
EmbeddingTable parse_embeddings(std::istream& in, EmbeddingFormat format,
                                ParseStats* stats = nullptr);

// Writes the table back out. With no precision, values use the shortest
// representation that parses back to the identical double.
void emit_embeddings(std::ostream& out, const EmbeddingTable& table,
                     EmbeddingFormat format,
                     std::optional<int> significant_digits = std::nullopt);

enum class NormalizationScope { PerDimension, PerRow, Global };

// Min-max scaling into [0,1]. Degenerate groups (max == min) map to 0.5.
// Throws Error(NonFiniteValue) on NaN or infinite input. Parallelized with
// OpenMP; see serial::normalize for the reference.
NormalizedEmbeddingTable normalize(const EmbeddingTable& table,
                                   NormalizationScope scope = NormalizationScope::PerDimension);

namespace serial {
NormalizedEmbeddingTable normalize(const EmbeddingTable& table,
                                   NormalizationScope scope = NormalizationScope::PerDimension);
}  // namespace serial

}  // namespace lex2vec
