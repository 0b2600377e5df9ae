#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lex2vec/embedding.hpp"
#include "lex2vec/labeler.hpp"
#include "lex2vec/lexicon.hpp"

namespace lex2vec {

enum class AvgMode { All, NamedOnly };

std::size_t named_dimension_count(const DimensionLabeling& labeling);

// Sum of all counts over all dimensions.
std::uint64_t label_mass(const DimensionLabeling& labeling);

// Fraction of dimensions with no labels.
double unnamed_ratio(const DimensionLabeling& labeling);

// Label mass divided by dim_count (All) or by the named dimensions
// (NamedOnly; throws Error(NoNamedDimensions) when there are none).
double avg_labels_per_dimension(const DimensionLabeling& labeling, AvgMode mode = AvgMode::All);

// Exploration variant counting distinct labels instead of label mass.
double avg_distinct_labels_per_dimension(const DimensionLabeling& labeling,
                                         AvgMode mode = AvgMode::All);

struct SweepRow {
  double theta = 0.0;
  std::string resource;
  double unnamed_ratio = 0.0;
  double avg_labels_all = 0.0;
  std::optional<double> avg_labels_named;  // empty when every dimension is unnamed

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // ordered by (resource, descending theta)

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// Label mass is the default; Distinct counts each label once per dimension.
enum class LabelCounting { Mass, Distinct };

SweepRow make_row(const DimensionLabeling& labeling, LabelCounting counting = LabelCounting::Mass);

struct SweepOptions {
  std::optional<std::size_t> label_limit;  // cap_labels applied before the metrics
  LabelCounting counting = LabelCounting::Mass;
};

// One row per (lexicon, theta), each from a fresh labeling without
// contributors. Throws Error(InvalidArgument) when either sequence is empty.
SweepReport sweep(const NormalizedEmbeddingTable& table, std::span<const Lexicon> lexicons,
                  std::span<const Theta> thetas, const SweepOptions& options = {});

// For each resource: unnamed_ratio non-increasing and avg_labels_all
// non-decreasing as theta decreases. Returns the first offending row index.
std::optional<std::size_t> find_trend_violation(const SweepReport& report);

// The grid evaluated for the published results table.
inline constexpr double kDefaultThetaGrid[] = {0.81, 0.79, 0.77, 0.75};

}  // namespace lex2vec
