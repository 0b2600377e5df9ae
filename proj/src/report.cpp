#include "lex2vec/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "lex2vec/error.hpp"

namespace lex2vec {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_percent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", ratio * 100.0);
  return buf;
}

namespace {

std::string format_one_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

}  // namespace

std::string dimension_name(const LabelCounts& counts) {
  if (counts.empty()) return kUnnamed;
  std::string name;
  for (const auto& [label, n] : ranked_labels(counts)) {
    if (!name.empty()) name += kLabelSeparator;
    name += label;
  }
  return name;
}

void write_labeling_tsv(std::ostream& out, const DimensionLabeling& labeling) {
  for (std::size_t j = 0; j < labeling.per_dimension.size(); ++j) {
    const auto& counts = labeling.per_dimension[j];
    out << j << '\t' << dimension_name(counts) << '\t';
    bool first = true;
    for (const auto& [label, n] : ranked_labels(counts)) {
      if (!first) out << ',';
      out << label << ':' << n;
      first = false;
    }
    out << '\n';
  }
}

std::string render_report_row(const SweepRow& row, AvgMode mode) {
  std::string avg;
  if (mode == AvgMode::All) {
    avg = format_one_decimal(row.avg_labels_all);
  } else {
    avg = row.avg_labels_named ? format_one_decimal(*row.avg_labels_named) : "NA";
  }
  return format_number(row.theta) + '\t' + row.resource + '\t' + format_percent(row.unnamed_ratio) +
         '\t' + avg;
}

void write_report_tsv(std::ostream& out, const SweepReport& report, AvgMode mode) {
  out << "theta\tresource\tpct_unnamed\tavg_labels_dim\n";
  for (const auto& row : report.rows) out << render_report_row(row, mode) << '\n';
}

namespace {

const char* band_name(Band band) { return band == Band::High ? "high" : "low"; }

Band parse_band(const std::string& s) {
  if (s == "high") return Band::High;
  if (s == "low") return Band::Low;
  throw Error(ErrorKind::InvalidArgument, "unknown band '" + s + "'");
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename Fn>
auto parse_json(const std::string& text, Fn&& fn) {
  try {
    return fn(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad JSON document: ") + e.what());
  }
}

}  // namespace

std::string labeling_to_json(const DimensionLabeling& labeling, int indent) {
  const SweepRow row = make_row(labeling);
  ordered_json doc;
  doc["resource"] = labeling.resource_name;
  doc["theta"] = labeling.theta_used.value();
  doc["dim_count"] = labeling.dim_count;
  doc["unnamed_ratio"] = row.unnamed_ratio;
  doc["avg_labels_all"] = row.avg_labels_all;
  doc["avg_labels_named"] = optional_number(row.avg_labels_named);
  doc["dimensions"] = ordered_json::array();
  for (std::size_t j = 0; j < labeling.per_dimension.size(); ++j) {
    ordered_json dim;
    dim["index"] = j;
    dim["name"] = dimension_name(labeling.per_dimension[j]);
    dim["labels"] = ordered_json::array();
    for (const auto& [label, n] : ranked_labels(labeling.per_dimension[j])) {
      dim["labels"].push_back(ordered_json{{"label", label}, {"count", n}});
    }
    if (labeling.contributors) {
      dim["contributors"] = ordered_json::array();
      for (const auto& c : (*labeling.contributors)[j]) {
        dim["contributors"].push_back(ordered_json{{"word_index", c.word_index},
                                                   {"word", c.word},
                                                   {"label", c.label},
                                                   {"band", band_name(c.band)}});
      }
    }
    doc["dimensions"].push_back(std::move(dim));
  }
  return doc.dump(indent);
}

DimensionLabeling labeling_from_json(const std::string& text) {
  return parse_json(text, [](const ordered_json& doc) {
    DimensionLabeling out;
    out.resource_name = doc.at("resource").get<std::string>();
    out.theta_used = Theta(doc.at("theta").get<double>());
    out.dim_count = doc.at("dim_count").get<std::size_t>();
    const auto& dims = doc.at("dimensions");
    if (dims.size() != out.dim_count) {
      throw Error(ErrorKind::InvalidArgument, "dimensions array does not match dim_count");
    }
    bool has_contributors = !dims.empty() && dims.front().contains("contributors");
    if (has_contributors) out.contributors.emplace(out.dim_count);
    for (std::size_t j = 0; j < dims.size(); ++j) {
      LabelCounts counts;
      for (const auto& entry : dims[j].at("labels")) {
        counts.emplace(entry.at("label").get<std::string>(), entry.at("count").get<std::uint64_t>());
      }
      out.per_dimension.push_back(std::move(counts));
      if (has_contributors) {
        for (const auto& c : dims[j].at("contributors")) {
          (*out.contributors)[j].push_back({c.at("word_index").get<std::size_t>(),
                                            c.at("word").get<std::string>(),
                                            c.at("label").get<std::string>(),
                                            parse_band(c.at("band").get<std::string>())});
        }
      }
    }
    return out;
  });
}

std::string report_to_json(const SweepReport& report, int indent) {
  ordered_json doc;
  doc["rows"] = ordered_json::array();
  for (const auto& row : report.rows) {
    doc["rows"].push_back(ordered_json{{"theta", row.theta},
                                       {"resource", row.resource},
                                       {"unnamed_ratio", row.unnamed_ratio},
                                       {"pct_unnamed", format_percent(row.unnamed_ratio)},
                                       {"avg_labels_dim", row.avg_labels_all},
                                       {"avg_named", optional_number(row.avg_labels_named)}});
  }
  return doc.dump(indent);
}

SweepReport report_from_json(const std::string& text) {
  return parse_json(text, [](const ordered_json& doc) {
    SweepReport report;
    for (const auto& r : doc.at("rows")) {
      SweepRow row;
      row.theta = r.at("theta").get<double>();
      row.resource = r.at("resource").get<std::string>();
      row.unnamed_ratio = r.at("unnamed_ratio").get<double>();
      row.avg_labels_all = r.at("avg_labels_dim").get<double>();
      if (!r.at("avg_named").is_null()) row.avg_labels_named = r.at("avg_named").get<double>();
      report.rows.push_back(std::move(row));
    }
    return report;
  });
}

}  // namespace lex2vec
