#pragma once

#include <iosfwd>
#include <string>

#include "lex2vec/labeler.hpp"
#include "lex2vec/metrics.hpp"

namespace lex2vec {

// Label concatenation used for dimension names.
inline constexpr char kLabelSeparator = '+';
inline constexpr const char* kUnnamed = "UNNAMED";

// Shortest decimal that reads back as the same double ("0.75").
std::string format_number(double value);

// Ratio in [0,1] as a one-decimal percentage ("17.8%").
std::string format_percent(double ratio);

// Labels joined by '+' in rank order, or "UNNAMED".
std::string dimension_name(const LabelCounts& counts);

// One line per dimension: "index<TAB>name<TAB>label:count,label:count".
void write_labeling_tsv(std::ostream& out, const DimensionLabeling& labeling);

// Header "theta<TAB>resource<TAB>pct_unnamed<TAB>avg_labels_dim", then one
// row per sweep cell; averages are rendered with one decimal. In NamedOnly
// mode a row without named dimensions shows "NA".
void write_report_tsv(std::ostream& out, const SweepReport& report, AvgMode mode = AvgMode::All);
std::string render_report_row(const SweepRow& row, AvgMode mode = AvgMode::All);

// JSON documents with a fixed key order. The parse functions accept exactly
// what the writers produce and throw Error(InvalidArgument) otherwise.
std::string labeling_to_json(const DimensionLabeling& labeling, int indent = 2);
DimensionLabeling labeling_from_json(const std::string& text);

std::string report_to_json(const SweepReport& report, int indent = 2);
SweepReport report_from_json(const std::string& text);

}  // namespace lex2vec
