#include "cli_app.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lex2vec/embedding.hpp"
#include "lex2vec/error.hpp"
#include "lex2vec/labeler.hpp"
#include "lex2vec/lexicon.hpp"
#include "lex2vec/metrics.hpp"
#include "lex2vec/report.hpp"

namespace lex2vec::cli {

namespace {

enum class Command { Label, Sweep, Metrics };

struct LexiconSource {
  std::string path;
  std::string format;  // nrc | liwc | plain
};

struct RunConfig {
  Command command = Command::Label;
  std::string embeddings_path;
  EmbeddingFormat embedding_format = EmbeddingFormat::Auto;
  NormalizationScope normalization = NormalizationScope::PerDimension;
  std::vector<LexiconSource> lexicons;
  std::optional<Theta> theta;
  std::vector<Theta> theta_grid;
  std::optional<std::size_t> label_limit;
  bool json = false;
  std::string output_path;  // empty means standard output
  bool keep_contributors = false;
  AvgMode avg_mode = AvgMode::All;
  LabelCounting counting = LabelCounting::Mass;
};

// Failure in one pipeline stage; rendered as "<stage> error: <message>".
struct StageError {
  std::string stage;
  std::string message;
};

struct UsageError {
  std::string message;
};

LexiconSource parse_lexicon_source(const std::string& spec) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw UsageError{"--lexicon expects PATH:FORMAT, got '" + spec + "'"};
  }
  LexiconSource src{spec.substr(0, colon), spec.substr(colon + 1)};
  if (src.format != "nrc" && src.format != "liwc" && src.format != "plain") {
    throw UsageError{"unknown lexicon format '" + src.format + "' (expected nrc, liwc or plain)"};
  }
  return src;
}

Theta parse_theta(const std::string& text) {
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError{"theta '" + text + "' is not a number"};
  }
  try {
    return Theta(value);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

std::vector<Theta> parse_grid(const std::string& text) {
  std::vector<Theta> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) grid.push_back(parse_theta(item));
  }
  if (grid.empty()) throw UsageError{"--theta-grid must list at least one theta"};
  return grid;
}

std::optional<std::size_t> parse_filter(const std::string& text) {
  if (text.empty() || text == "none") return std::nullopt;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon == std::string::npos || (kind != "cap" && kind != "topk")) {
    throw UsageError{"--filter expects none, cap:N or topk:N, got '" + text + "'"};
  }
  const std::string number = text.substr(colon + 1);
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != number.size() || n < 1) {
    throw UsageError{"filter limit must be a positive integer, got '" + number + "'"};
  }
  return static_cast<std::size_t>(n);
}

EmbeddingTable load_embeddings(const RunConfig& cfg, std::istream& stdin_stream, std::ostream& err) {
  const std::string& path = cfg.embeddings_path;
  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (path != "-") {
    file.open(path);
    if (!file) throw StageError{"parse", "cannot open embeddings file '" + path + "'"};
    in = &file;
  }
  try {
    ParseStats stats;
    auto table = parse_embeddings(*in, cfg.embedding_format, &stats);
    if (stats.duplicates_skipped > 0) {
      err << "warning: skipped " << stats.duplicates_skipped << " duplicate word(s) in '" << path
          << "'\n";
    }
    return table;
  } catch (const Error& e) {
    throw StageError{"parse", path + ": " + e.what()};
  }
}

Lexicon load_lexicon(const LexiconSource& src) {
  std::ifstream file(src.path);
  if (!file) throw StageError{"lexicon", "cannot open lexicon file '" + src.path + "'"};
  try {
    if (src.format == "nrc") return load_nrc(file);
    if (src.format == "liwc") return load_liwc(file);
    return load_plain(file, std::filesystem::path(src.path).stem().string());
  } catch (const Error& e) {
    throw StageError{"lexicon", src.path + ": " + e.what()};
  }
}

// Several lexicons on `label` are merged into one resource named "a+b".
Lexicon combined_lexicon(const std::vector<Lexicon>& lexicons) {
  if (lexicons.size() == 1) return lexicons.front();
  std::string name;
  for (const auto& lex : lexicons) {
    if (!name.empty()) name += kLabelSeparator;
    name += lex.resource_name();
  }
  LexiconBuilder builder(name);
  for (const auto& lex : lexicons) builder.add_all(lex);
  return builder.build();
}

std::string execute(const RunConfig& cfg, std::istream& in, std::ostream& err) {
  const EmbeddingTable raw = load_embeddings(cfg, in, err);
  std::vector<Lexicon> lexicons;
  for (const auto& src : cfg.lexicons) lexicons.push_back(load_lexicon(src));

  std::optional<NormalizedEmbeddingTable> table;
  try {
    table.emplace(normalize(raw, cfg.normalization));
  } catch (const Error& e) {
    throw StageError{"normalize", e.what()};
  }

  std::ostringstream out;
  try {
    switch (cfg.command) {
      case Command::Label: {
        auto labeling = label_dimensions(*table, combined_lexicon(lexicons), *cfg.theta,
                                         cfg.keep_contributors);
        if (cfg.label_limit) labeling = cap_labels(labeling, *cfg.label_limit);
        if (cfg.json) {
          out << labeling_to_json(labeling) << '\n';
        } else {
          write_labeling_tsv(out, labeling);
        }
        break;
      }
      case Command::Sweep:
      case Command::Metrics: {
        const std::vector<Theta> thetas =
            cfg.command == Command::Sweep ? cfg.theta_grid : std::vector<Theta>{*cfg.theta};
        const SweepReport report =
            sweep(*table, lexicons, thetas, SweepOptions{cfg.label_limit, cfg.counting});
        if (auto bad = find_trend_violation(report)) {
          err << "warning: report row " << *bad << " breaks the theta trend\n";
        }
        if (cfg.json) {
          out << report_to_json(report) << '\n';
        } else {
          write_report_tsv(out, report, cfg.avg_mode);
        }
        break;
      }
    }
  } catch (const Error& e) {
    throw StageError{"label", e.what()};
  }
  return out.str();
}

void add_common_options(CLI::App& sub, RunConfig& cfg, std::vector<std::string>& lexicon_specs,
                        std::string& filter) {
  sub.add_option("--embeddings", cfg.embeddings_path,
                 "Embedding file in word2vec or GloVe text format ('-' for stdin)")
      ->required();
  sub.add_option("--embedding-format", cfg.embedding_format, "auto, word2vec or glove")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EmbeddingFormat>{{"auto", EmbeddingFormat::Auto},
                                                 {"word2vec", EmbeddingFormat::Word2VecText},
                                                 {"glove", EmbeddingFormat::GloVeText}},
          CLI::ignore_case));
  sub.add_option("--lexicon", lexicon_specs, "Lexical resource as PATH:FORMAT (nrc, liwc, plain)")
      ->required()
      ->take_all()
      ->allow_extra_args(false);
  sub.add_option("--normalization", cfg.normalization,
                 "Min-max scope: dimension (default), row or global")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, NormalizationScope>{{"dimension", NormalizationScope::PerDimension},
                                                    {"row", NormalizationScope::PerRow},
                                                    {"global", NormalizationScope::Global}},
          CLI::ignore_case));
  sub.add_option("--filter", filter, "none, cap:N or topk:N");
  sub.add_option("--output", cfg.output_path, "Write to this file instead of stdout");
  sub.add_flag("--json", cfg.json, "Emit JSON instead of TSV");
}

void add_metric_options(CLI::App& sub, RunConfig& cfg, bool& distinct) {
  sub.add_option("--avg-mode", cfg.avg_mode, "Average over all or named dimensions")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, AvgMode>{{"all", AvgMode::All}, {"named", AvgMode::NamedOnly}},
          CLI::ignore_case));
  sub.add_flag("--distinct-labels", distinct, "Count distinct labels instead of label mass");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Name word-embedding dimensions with lexical-resource labels", "lex2vec"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> lexicon_specs;
  std::string filter;
  std::string theta_text;
  std::string grid_text;
  bool distinct = false;

  auto* label = app.add_subcommand("label", "Label every dimension at one theta");
  add_common_options(*label, cfg, lexicon_specs, filter);
  label->add_option("--theta", theta_text, "Threshold in (0.5, 1]")->required();
  label->add_flag("--contributors", cfg.keep_contributors,
                  "Keep the (word, label, band) records behind each count (JSON only)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate metrics over a theta grid");
  add_common_options(*sweep_cmd, cfg, lexicon_specs, filter);
  sweep_cmd->add_option("--theta-grid", grid_text, "Comma-separated thetas")
      ->default_str("0.81,0.79,0.77,0.75");
  add_metric_options(*sweep_cmd, cfg, distinct);

  auto* metrics_cmd = app.add_subcommand("metrics", "Unnamed ratio and label averages at one theta");
  add_common_options(*metrics_cmd, cfg, lexicon_specs, filter);
  metrics_cmd->add_option("--theta", theta_text, "Threshold in (0.5, 1]")->required();
  add_metric_options(*metrics_cmd, cfg, distinct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (label->parsed()) cfg.command = Command::Label;
    if (sweep_cmd->parsed()) cfg.command = Command::Sweep;
    if (metrics_cmd->parsed()) cfg.command = Command::Metrics;

    for (const auto& spec : lexicon_specs) cfg.lexicons.push_back(parse_lexicon_source(spec));
    cfg.label_limit = parse_filter(filter);
    cfg.counting = distinct ? LabelCounting::Distinct : LabelCounting::Mass;
    if (cfg.command == Command::Sweep) {
      const bool given = sweep_cmd->count("--theta-grid") > 0;
      cfg.theta_grid = parse_grid(given ? grid_text : "0.81,0.79,0.77,0.75");
    } else {
      cfg.theta = parse_theta(theta_text);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return kExitUsage;
  }

  try {
    const std::string rendered = execute(cfg, in, err);
    if (cfg.output_path.empty()) {
      out << rendered;
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      file << rendered;
      if (!file) throw StageError{"output", "cannot write '" + cfg.output_path + "'"};
    }
  } catch (const StageError& e) {
    err << e.stage << " error: " << e.message << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace lex2vec::cli
