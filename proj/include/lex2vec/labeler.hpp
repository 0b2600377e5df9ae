#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lex2vec/embedding.hpp"
#include "lex2vec/lexicon.hpp"

namespace lex2vec {

// Selectivity threshold, restricted to (0.5, 1] so the high band (theta, 1]
// and the low band [0, 1 - theta) never overlap.
class Theta {
 public:
  // Throws Error(InvalidTheta) outside (0.5, 1].
  explicit Theta(double value);

  double value() const noexcept { return value_; }
  double low_cut() const noexcept { return 1.0 - value_; }

  friend auto operator<=>(const Theta&, const Theta&) = default;

 private:
  double value_;
};

enum class Band : std::uint8_t { High, Low };

// Strict comparisons: a value equal to theta or 1 - theta is in neither band.
inline std::optional<Band> band_of(double value, Theta theta) noexcept {
  if (value > theta.value()) return Band::High;
  if (value < theta.low_cut()) return Band::Low;
  return std::nullopt;
}

struct Contributor {
  std::size_t word_index = 0;
  std::string word;
  std::string label;
  Band band = Band::High;

  friend bool operator==(const Contributor&, const Contributor&) = default;
};

using LabelCounts = std::map<std::string, std::uint64_t>;

// Per-dimension label multiset, the named header of the embedding space. An
// empty LabelCounts marks an unnamed dimension.
struct DimensionLabeling {
  std::size_t dim_count = 0;
  std::vector<LabelCounts> per_dimension;
  // Present only when requested; per dimension, ordered by (vocabulary
  // position, label).
  std::optional<std::vector<std::vector<Contributor>>> contributors;
  Theta theta_used{1.0};
  std::string resource_name;

  friend bool operator==(const DimensionLabeling&, const DimensionLabeling&) = default;
};

// Words of a table that have at least one lexicon label, in vocabulary order.
struct VocabularyMatches {
  std::vector<std::size_t> word_index;
  std::vector<std::vector<LabelId>> labels;  // sorted ids per matched word
};

VocabularyMatches match_vocabulary(const NormalizedEmbeddingTable& table, const Lexicon& lexicon);

// OpenMP kernel: dimensions are distributed across threads, each dimension
// scans matched words in vocabulary order, so the result is identical to the
// serial definition regardless of thread count.
DimensionLabeling label_dimensions(const NormalizedEmbeddingTable& table, const Lexicon& lexicon,
                                   Theta theta, bool keep_contributors = false);

// Reuses a precomputed match set; `matches` must come from the same table
// and lexicon.
DimensionLabeling label_dimensions(const NormalizedEmbeddingTable& table, const Lexicon& lexicon,
                                   const VocabularyMatches& matches, Theta theta,
                                   bool keep_contributors = false);

namespace serial {
// Reference implementation: words outer, dimensions inner, string-keyed
// counts. Kept for testing and benchmarking.
DimensionLabeling label_dimensions(const NormalizedEmbeddingTable& table, const Lexicon& lexicon,
                                   Theta theta, bool keep_contributors = false);
}  // namespace serial

// Labels by descending count, then lexicographically.
std::vector<std::pair<std::string, std::uint64_t>> ranked_labels(const LabelCounts& counts);

// Keeps at most `limit` labels per dimension by rank. Retained counts are
// unchanged; contributors of dropped labels are removed. Throws
// Error(InvalidArgument) when limit is 0.
DimensionLabeling cap_labels(const DimensionLabeling& labeling, std::size_t limit);

// Frequency-rank truncation; same contract as cap_labels.
DimensionLabeling top_k_frequent(const DimensionLabeling& labeling, std::size_t k);

}  // namespace lex2vec
