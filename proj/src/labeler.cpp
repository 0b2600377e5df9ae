#include "lex2vec/labeler.hpp"

#include <algorithm>

#include "lex2vec/error.hpp"

namespace lex2vec {

Theta::Theta(double value) : value_(value) {
  if (!(value > 0.5 && value <= 1.0)) {
    throw Error(ErrorKind::InvalidTheta,
                "theta must lie in (0.5, 1], got " + std::to_string(value));
  }
}

VocabularyMatches match_vocabulary(const NormalizedEmbeddingTable& table, const Lexicon& lexicon) {
  const auto n = static_cast<std::ptrdiff_t>(table.size());
  std::vector<std::vector<LabelId>> per_word(table.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    per_word[i] = lexicon.lookup_ids(table.vocabulary()[i]);
  }

  VocabularyMatches matches;
  for (std::size_t i = 0; i < per_word.size(); ++i) {
    if (per_word[i].empty()) continue;
    matches.word_index.push_back(i);
    matches.labels.push_back(std::move(per_word[i]));
  }
  return matches;
}

DimensionLabeling label_dimensions(const NormalizedEmbeddingTable& table, const Lexicon& lexicon,
                                   Theta theta, bool keep_contributors) {
  return label_dimensions(table, lexicon, match_vocabulary(table, lexicon), theta,
                          keep_contributors);
}

DimensionLabeling label_dimensions(const NormalizedEmbeddingTable& table, const Lexicon& lexicon,
                                   const VocabularyMatches& matches, Theta theta,
                                   bool keep_contributors) {
  const std::size_t dims = table.dim_count();
  if (matches.word_index.size() != matches.labels.size()) {
    throw Error(ErrorKind::DimensionMismatch, "match set is inconsistent");
  }
  for (std::size_t w : matches.word_index) {
    if (w >= table.size()) {
      throw Error(ErrorKind::DimensionMismatch, "match set refers to a word outside the table");
    }
  }

  DimensionLabeling out;
  out.dim_count = dims;
  out.per_dimension.resize(dims);
  out.theta_used = theta;
  out.resource_name = lexicon.resource_name();
  if (keep_contributors) out.contributors.emplace(dims);

  const std::size_t label_count = lexicon.labels().size();
  const auto dim_total = static_cast<std::ptrdiff_t>(dims);
  const double* values = table.table().values().data();

#pragma omp parallel
  {
    std::vector<std::uint64_t> scratch(label_count, 0);
    std::vector<LabelId> touched;

#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t j = 0; j < dim_total; ++j) {
      std::vector<Contributor>* records = keep_contributors ? &(*out.contributors)[j] : nullptr;
      for (std::size_t m = 0; m < matches.word_index.size(); ++m) {
        const std::size_t w = matches.word_index[m];
        const auto band = band_of(values[w * dims + j], theta);
        if (!band) continue;
        for (LabelId id : matches.labels[m]) {
          if (scratch[id]++ == 0) touched.push_back(id);
          if (records) records->push_back({w, table.vocabulary()[w], lexicon.label(id), *band});
        }
      }
      auto& counts = out.per_dimension[j];
      for (LabelId id : touched) {
        counts.emplace(lexicon.label(id), scratch[id]);
        scratch[id] = 0;
      }
      touched.clear();
    }
  }
  return out;
}

namespace serial {

DimensionLabeling label_dimensions(const NormalizedEmbeddingTable& table, const Lexicon& lexicon,
                                   Theta theta, bool keep_contributors) {
  const std::size_t dims = table.dim_count();
  DimensionLabeling out;
  out.dim_count = dims;
  out.per_dimension.resize(dims);
  out.theta_used = theta;
  out.resource_name = lexicon.resource_name();
  if (keep_contributors) out.contributors.emplace(dims);

  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& word = table.vocabulary()[i];
    const auto labels = lexicon.lookup(word);
    if (labels.empty()) continue;
    for (std::size_t j = 0; j < dims; ++j) {
      const auto band = band_of(table.at(i, j), theta);
      if (!band) continue;
      for (const auto& label : labels) {
        ++out.per_dimension[j][label];
        if (keep_contributors) (*out.contributors)[j].push_back({i, word, label, *band});
      }
    }
  }
  return out;
}

}  // namespace serial

std::vector<std::pair<std::string, std::uint64_t>> ranked_labels(const LabelCounts& counts) {
  std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

DimensionLabeling cap_labels(const DimensionLabeling& labeling, std::size_t limit) {
  if (limit == 0) throw Error(ErrorKind::InvalidArgument, "label limit must be at least 1");
  DimensionLabeling out = labeling;
  for (std::size_t j = 0; j < out.per_dimension.size(); ++j) {
    auto& counts = out.per_dimension[j];
    if (counts.size() <= limit) continue;
    auto ranked = ranked_labels(counts);
    ranked.resize(limit);
    counts = LabelCounts(ranked.begin(), ranked.end());
    if (out.contributors) {
      std::erase_if((*out.contributors)[j],
                    [&](const Contributor& c) { return !counts.contains(c.label); });
    }
  }
  return out;
}

DimensionLabeling top_k_frequent(const DimensionLabeling& labeling, std::size_t k) {
  return cap_labels(labeling, k);
}

}  // namespace lex2vec
