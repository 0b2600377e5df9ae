#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lex2vec {

// Index into Lexicon::labels(). Ids are assigned in lexicographic label
// order, so sorting ids sorts labels.
using LabelId = std::uint32_t;

struct LexiconEntry {
  std::string pattern;  // lowercased; prefixes carry no wildcard
  std::string label;
  bool is_prefix = false;

  friend auto operator<=>(const LexiconEntry&, const LexiconEntry&) = default;
};

class LexiconBuilder;

// Immutable word -> labels lookup. Exact entries live in a hash map, prefix
// entries in a byte trie so lookup cost is bounded by word length plus the
// number of matches.
class Lexicon {
 public:
  Lexicon() = default;

  const std::string& resource_name() const noexcept { return resource_name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(LabelId id) const { return labels_.at(id); }

  // Union of the exact entry and every prefix entry matching `word`. The
  // query is lowercased and matched literally.
  std::set<std::string> lookup(std::string_view word) const;

  // Same as lookup() but as sorted, unique label ids.
  std::vector<LabelId> lookup_ids(std::string_view word) const;

  // All (pattern, label) pairs in sorted order.
  std::vector<LexiconEntry> entries() const;
  std::size_t entry_count() const noexcept { return entry_count_; }
  bool empty() const noexcept { return entry_count_ == 0; }

 private:
  friend class LexiconBuilder;

  struct TrieNode {
    std::vector<std::pair<unsigned char, std::uint32_t>> children;  // sorted by byte
    std::vector<LabelId> labels;                                     // sorted
  };

  std::string resource_name_;
  std::vector<std::string> labels_;
  // Sorted by word for deterministic iteration.
  std::vector<std::pair<std::string, std::vector<LabelId>>> exact_;
  std::vector<TrieNode> trie_;  // trie_[0] is the root once non-empty
  std::size_t entry_count_ = 0;

  const std::vector<LabelId>* find_exact(std::string_view word) const;
};

class LexiconBuilder {
 public:
  explicit LexiconBuilder(std::string resource_name = {});

  // Throws Error(InvalidArgument) for an empty word/prefix or a label that is
  // empty or contains whitespace, '+', ',' or ':'.
  LexiconBuilder& add_exact(std::string_view word, std::string_view label);
  LexiconBuilder& add_prefix(std::string_view prefix, std::string_view label);
  LexiconBuilder& add(const LexiconEntry& entry);
  LexiconBuilder& add_all(const Lexicon& lexicon);

  Lexicon build() const;

 private:
  std::string resource_name_;
  std::set<LexiconEntry> entries_;
};

// "word<TAB>label<TAB>flag", flag in {0,1}; only flag-1 lines are kept.
Lexicon load_nrc(std::istream& in);

// LIWC .dic: "%", "catid<TAB>catname" lines, "%", then
// "word<TAB>catid[<TAB>catid...]". A trailing '*' marks a prefix pattern.
Lexicon load_liwc(std::istream& in);

// "word<TAB>label" per line, exact entries only.
Lexicon load_plain(std::istream& in, std::string resource_name = "plain");

// Canonical .dic rendering: categories numbered from 1 in label order, body
// sorted by pattern. Reloading with load_liwc gives identical lookups.
void emit_liwc(std::ostream& out, const Lexicon& lexicon);

}  // namespace lex2vec
