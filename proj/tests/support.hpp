#pragma once

// Test-only helpers: random fixture generators and a brute-force labeling
// oracle that shares no code with the library's lookup or labeling paths.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lex2vec/embedding.hpp"
#include "lex2vec/lexicon.hpp"

namespace lex2vec::testing {

struct RawEntry {
  std::string pattern;
  std::string label;
  bool prefix = false;
};

struct Fixture {
  std::vector<std::string> words;
  std::vector<double> values;  // row-major, already in [0,1]
  std::size_t dims = 0;
  std::vector<RawEntry> entries;
};

inline std::string lower(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

// Linear scan over every entry.
inline std::set<std::string> oracle_lookup(const std::vector<RawEntry>& entries,
                                           const std::string& word) {
  const std::string w = lower(word);
  std::set<std::string> out;
  for (const auto& e : entries) {
    const std::string p = lower(e.pattern);
    const bool hit = e.prefix ? (w.size() >= p.size() && w.compare(0, p.size(), p) == 0) : w == p;
    if (hit) out.insert(e.label);
  }
  return out;
}

// Triple loop: word, dimension, label.
inline std::vector<std::map<std::string, std::uint64_t>> oracle_label(const Fixture& f,
                                                                      double theta) {
  std::vector<std::map<std::string, std::uint64_t>> counts(f.dims);
  for (std::size_t i = 0; i < f.words.size(); ++i) {
    const auto labels = oracle_lookup(f.entries, f.words[i]);
    for (std::size_t j = 0; j < f.dims; ++j) {
      const double v = f.values[i * f.dims + j];
      const bool high = v > theta;
      const bool low = v < 1.0 - theta;
      if (!high && !low) continue;
      for (const auto& label : labels) ++counts[j][label];
    }
  }
  return counts;
}

inline Lexicon build_lexicon(const std::vector<RawEntry>& entries, std::string name = "test") {
  LexiconBuilder b(std::move(name));
  for (const auto& e : entries) {
    if (e.prefix) {
      b.add_prefix(e.pattern, e.label);
    } else {
      b.add_exact(e.pattern, e.label);
    }
  }
  return b.build();
}

inline NormalizedEmbeddingTable to_table(const Fixture& f) {
  return NormalizedEmbeddingTable::from_unit_interval(EmbeddingTable(f.words, f.values, f.dims));
}

// Random short words over a tiny alphabet so prefixes and exact hits collide.
inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  static constexpr char alphabet[] = "abcd";
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> ch(0, 3);
  std::string w(len(rng), 'a');
  for (char& c : w) c = alphabet[ch(rng)];
  return w;
}

// Values mix continuous draws with exact band boundaries for common thetas.
inline double random_unit_value(std::mt19937_64& rng) {
  static constexpr double specials[] = {0.0, 1.0, 0.5, 0.6, 0.75, 0.9, 0.81, 0.79, 0.77};
  std::uniform_int_distribution<int> pick(0, 3);
  if (pick(rng) == 0) {
    std::uniform_int_distribution<std::size_t> s(0, std::size(specials) - 1);
    const double v = specials[s(rng)];
    return std::bernoulli_distribution(0.5)(rng) ? v : 1.0 - v;
  }
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::vector<RawEntry> random_entries(std::mt19937_64& rng, std::size_t count) {
  static const char* labels[] = {"posemo", "negemo", "anger", "fear", "joy", "trust", "sad"};
  std::uniform_int_distribution<std::size_t> lab(0, std::size(labels) - 1);
  std::vector<RawEntry> out;
  for (std::size_t k = 0; k < count; ++k) {
    const bool prefix = std::bernoulli_distribution(0.3)(rng);
    out.push_back({random_word(rng, 1, prefix ? 2 : 4), labels[lab(rng)], prefix});
  }
  return out;
}

inline Fixture random_fixture(std::mt19937_64& rng, std::size_t max_words, std::size_t max_dims,
                              std::size_t max_entries) {
  Fixture f;
  std::uniform_int_distribution<std::size_t> nw(1, max_words);
  std::uniform_int_distribution<std::size_t> nd(1, max_dims);
  std::uniform_int_distribution<std::size_t> ne(0, max_entries);
  const std::size_t target = nw(rng);
  f.dims = nd(rng);
  std::set<std::string> seen;
  for (std::size_t attempts = 0; f.words.size() < target && attempts < 50 * target; ++attempts) {
    auto w = random_word(rng, 1, 5);
    if (seen.insert(w).second) f.words.push_back(std::move(w));
  }
  for (std::size_t k = 0; k < f.words.size() * f.dims; ++k) f.values.push_back(random_unit_value(rng));
  f.entries = random_entries(rng, ne(rng));
  return f;
}

// Raw Gaussian table for normalization and round-trip tests.
inline EmbeddingTable random_raw_table(std::mt19937_64& rng, std::size_t words, std::size_t dims) {
  std::vector<std::string> vocab;
  vocab.reserve(words);
  for (std::size_t i = 0; i < words; ++i) vocab.push_back("w" + std::to_string(i));
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> values(words * dims);
  for (double& v : values) v = g(rng);
  return EmbeddingTable(std::move(vocab), std::move(values), dims);
}

}  // namespace lex2vec::testing
