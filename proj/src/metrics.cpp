#include "lex2vec/metrics.hpp"

#include <algorithm>

#include "lex2vec/error.hpp"

namespace lex2vec {

std::size_t named_dimension_count(const DimensionLabeling& labeling) {
  return static_cast<std::size_t>(
      std::count_if(labeling.per_dimension.begin(), labeling.per_dimension.end(),
                    [](const LabelCounts& c) { return !c.empty(); }));
}

std::uint64_t label_mass(const DimensionLabeling& labeling) {
  std::uint64_t mass = 0;
  for (const auto& counts : labeling.per_dimension) {
    for (const auto& [label, n] : counts) mass += n;
  }
  return mass;
}

double unnamed_ratio(const DimensionLabeling& labeling) {
  if (labeling.dim_count == 0) return 0.0;
  const auto unnamed = labeling.dim_count - named_dimension_count(labeling);
  return static_cast<double>(unnamed) / static_cast<double>(labeling.dim_count);
}

namespace {

double divide(std::uint64_t numerator, const DimensionLabeling& labeling, AvgMode mode) {
  std::size_t denominator = labeling.dim_count;
  if (mode == AvgMode::NamedOnly) {
    denominator = named_dimension_count(labeling);
    if (denominator == 0) {
      throw Error(ErrorKind::NoNamedDimensions, "every dimension is unnamed");
    }
  }
  if (denominator == 0) return 0.0;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

double avg_labels_per_dimension(const DimensionLabeling& labeling, AvgMode mode) {
  return divide(label_mass(labeling), labeling, mode);
}

double avg_distinct_labels_per_dimension(const DimensionLabeling& labeling, AvgMode mode) {
  std::uint64_t distinct = 0;
  for (const auto& counts : labeling.per_dimension) distinct += counts.size();
  return divide(distinct, labeling, mode);
}

SweepRow make_row(const DimensionLabeling& labeling, LabelCounting counting) {
  auto average = counting == LabelCounting::Mass ? avg_labels_per_dimension
                                                 : avg_distinct_labels_per_dimension;
  SweepRow row;
  row.theta = labeling.theta_used.value();
  row.resource = labeling.resource_name;
  row.unnamed_ratio = unnamed_ratio(labeling);
  row.avg_labels_all = average(labeling, AvgMode::All);
  if (named_dimension_count(labeling) > 0) row.avg_labels_named = average(labeling, AvgMode::NamedOnly);
  return row;
}

SweepReport sweep(const NormalizedEmbeddingTable& table, std::span<const Lexicon> lexicons,
                  std::span<const Theta> thetas, const SweepOptions& options) {
  if (lexicons.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs at least one lexicon");
  if (thetas.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs at least one theta");

  SweepReport report;
  for (const auto& lexicon : lexicons) {
    const auto matches = match_vocabulary(table, lexicon);
    for (Theta theta : thetas) {
      auto labeling = label_dimensions(table, lexicon, matches, theta);
      if (options.label_limit) labeling = cap_labels(labeling, *options.label_limit);
      report.rows.push_back(make_row(labeling, options.counting));
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.resource != b.resource) return a.resource < b.resource;
    return a.theta > b.theta;
  });
  return report;
}

std::optional<std::size_t> find_trend_violation(const SweepReport& report) {
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& prev = report.rows[i - 1];
    const auto& cur = report.rows[i];
    if (prev.resource != cur.resource || cur.theta >= prev.theta) continue;
    if (cur.unnamed_ratio > prev.unnamed_ratio || cur.avg_labels_all < prev.avg_labels_all) {
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace lex2vec
