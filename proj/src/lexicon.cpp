#include "lex2vec/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include "internal.hpp"
#include "lex2vec/error.hpp"

namespace lex2vec {

namespace {

void check_label(std::string_view label) {
  if (label.empty()) throw Error(ErrorKind::InvalidArgument, "empty label");
  for (char c : label) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '+' || c == ',' || c == ':') {
      throw Error(ErrorKind::InvalidArgument,
                  "label '" + std::string(label) + "' contains a reserved character");
    }
  }
}

void check_pattern(std::string_view pattern, const char* what) {
  if (pattern.empty()) throw Error(ErrorKind::InvalidArgument, std::string("empty ") + what);
  for (char c : pattern) {
    if (c == '\t' || c == '\n' || c == '\r') {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(what) + " '" + std::string(pattern) + "' contains a tab or newline");
    }
  }
}

void merge_sorted(std::vector<LabelId>& into, const std::vector<LabelId>& from) {
  std::vector<LabelId> merged;
  merged.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(merged));
  into.swap(merged);
}

// Runs `fn` and rethrows InvalidArgument as a lexicon-line error.
template <typename Fn>
void at_line(std::size_t line_no, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument) throw;
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw Error(ErrorKind::MalformedLexiconLine, msg, line_no);
  }
}

}  // namespace

const std::vector<LabelId>* Lexicon::find_exact(std::string_view word) const {
  auto it = std::lower_bound(exact_.begin(), exact_.end(), word,
                             [](const auto& entry, std::string_view w) { return entry.first < w; });
  if (it == exact_.end() || it->first != word) return nullptr;
  return &it->second;
}

std::vector<LabelId> Lexicon::lookup_ids(std::string_view word) const {
  const std::string key = detail::ascii_lower(word);
  std::vector<LabelId> out;
  if (const auto* exact = find_exact(key)) out = *exact;

  if (trie_.empty()) return out;
  std::uint32_t node = 0;
  for (char ch : key) {
    const auto& children = trie_[node].children;
    const auto byte = static_cast<unsigned char>(ch);
    auto it = std::lower_bound(children.begin(), children.end(), byte,
                               [](const auto& c, unsigned char b) { return c.first < b; });
    if (it == children.end() || it->first != byte) break;
    node = it->second;
    if (!trie_[node].labels.empty()) merge_sorted(out, trie_[node].labels);
  }
  return out;
}

std::set<std::string> Lexicon::lookup(std::string_view word) const {
  std::set<std::string> out;
  for (LabelId id : lookup_ids(word)) out.insert(labels_[id]);
  return out;
}

std::vector<LexiconEntry> Lexicon::entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entry_count_);
  for (const auto& [word, ids] : exact_) {
    for (LabelId id : ids) out.push_back({word, labels_[id], false});
  }
  if (!trie_.empty()) {
    // Depth-first walk rebuilding each prefix.
    std::string prefix;
    auto walk = [&](auto&& self, std::uint32_t node) -> void {
      for (LabelId id : trie_[node].labels) out.push_back({prefix, labels_[id], true});
      for (const auto& [byte, child] : trie_[node].children) {
        prefix.push_back(static_cast<char>(byte));
        self(self, child);
        prefix.pop_back();
      }
    };
    walk(walk, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LexiconBuilder::LexiconBuilder(std::string resource_name)
    : resource_name_(std::move(resource_name)) {}

LexiconBuilder& LexiconBuilder::add_exact(std::string_view word, std::string_view label) {
  check_pattern(word, "word");
  check_label(label);
  entries_.insert({detail::ascii_lower(word), std::string(label), false});
  return *this;
}

LexiconBuilder& LexiconBuilder::add_prefix(std::string_view prefix, std::string_view label) {
  check_pattern(prefix, "prefix");
  check_label(label);
  entries_.insert({detail::ascii_lower(prefix), std::string(label), true});
  return *this;
}

LexiconBuilder& LexiconBuilder::add(const LexiconEntry& entry) {
  return entry.is_prefix ? add_prefix(entry.pattern, entry.label)
                         : add_exact(entry.pattern, entry.label);
}

LexiconBuilder& LexiconBuilder::add_all(const Lexicon& lexicon) {
  for (const auto& e : lexicon.entries()) add(e);
  return *this;
}

Lexicon LexiconBuilder::build() const {
  Lexicon lex;
  lex.resource_name_ = resource_name_;
  lex.entry_count_ = entries_.size();

  std::set<std::string> label_set;
  for (const auto& e : entries_) label_set.insert(e.label);
  lex.labels_.assign(label_set.begin(), label_set.end());
  auto id_of = [&](const std::string& label) {
    return static_cast<LabelId>(
        std::lower_bound(lex.labels_.begin(), lex.labels_.end(), label) - lex.labels_.begin());
  };

  // entries_ is ordered by (pattern, label, is_prefix) so ids per word come
  // out sorted when pushed in order.
  std::map<std::string, std::vector<LabelId>> exact;
  for (const auto& e : entries_) {
    if (e.is_prefix) continue;
    exact[e.pattern].push_back(id_of(e.label));
  }
  lex.exact_.assign(exact.begin(), exact.end());

  for (const auto& e : entries_) {
    if (!e.is_prefix) continue;
    if (lex.trie_.empty()) lex.trie_.emplace_back();
    std::uint32_t node = 0;
    for (char ch : e.pattern) {
      const auto byte = static_cast<unsigned char>(ch);
      auto& children = lex.trie_[node].children;
      auto it = std::lower_bound(children.begin(), children.end(), byte,
                                 [](const auto& c, unsigned char b) { return c.first < b; });
      if (it != children.end() && it->first == byte) {
        node = it->second;
      } else {
        const auto child = static_cast<std::uint32_t>(lex.trie_.size());
        children.insert(it, {byte, child});
        lex.trie_.emplace_back();
        node = child;
      }
    }
    auto& labels = lex.trie_[node].labels;
    labels.insert(std::upper_bound(labels.begin(), labels.end(), id_of(e.label)), id_of(e.label));
  }
  return lex;
}

Lexicon load_nrc(std::istream& in) {
  LexiconBuilder builder("nrc");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::split_whitespace(text).empty()) continue;
    auto fields = detail::split_char(text, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorKind::MalformedLexiconLine,
                  "expected word<TAB>label<TAB>flag, got " + std::to_string(fields.size()) +
                      " fields",
                  line_no);
    }
    if (fields[2] == "0") continue;
    if (fields[2] != "1") {
      throw Error(ErrorKind::MalformedLexiconLine,
                  "flag must be 0 or 1, got '" + std::string(fields[2]) + "'", line_no);
    }
    at_line(line_no, [&] { builder.add_exact(fields[0], fields[1]); });
  }
  return builder.build();
}

Lexicon load_plain(std::istream& in, std::string resource_name) {
  LexiconBuilder builder(std::move(resource_name));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::split_whitespace(text).empty()) continue;
    auto fields = detail::split_char(text, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorKind::MalformedLexiconLine,
                  "expected word<TAB>label, got " + std::to_string(fields.size()) + " fields",
                  line_no);
    }
    at_line(line_no, [&] { builder.add_exact(fields[0], fields[1]); });
  }
  return builder.build();
}

Lexicon load_liwc(std::istream& in) {
  enum class Section { Preamble, Categories, Body };
  Section section = Section::Preamble;
  std::map<long, std::string> categories;
  LexiconBuilder builder("liwc");

  auto parse_id = [](std::string_view tok, long& id) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    return ec == std::errc() && ptr == tok.data() + tok.size();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_whitespace(line);
    if (tokens.empty()) continue;
    const bool is_delim = tokens.size() == 1 && tokens[0] == "%";

    switch (section) {
      case Section::Preamble:
        if (!is_delim) {
          throw Error(ErrorKind::MissingDelimiter, "dictionary must start with a '%' line",
                      line_no);
        }
        section = Section::Categories;
        break;
      case Section::Categories: {
        if (is_delim) {
          section = Section::Body;
          break;
        }
        long id;
        if (tokens.size() != 2 || !parse_id(tokens[0], id)) {
          throw Error(ErrorKind::MalformedLexiconLine, "expected catid<TAB>catname", line_no);
        }
        if (!categories.emplace(id, std::string(tokens[1])).second) {
          throw Error(ErrorKind::MalformedLexiconLine,
                      "category id " + std::to_string(id) + " declared twice", line_no);
        }
        break;
      }
      case Section::Body: {
        if (is_delim) {
          throw Error(ErrorKind::MalformedLexiconLine, "unexpected third '%' line", line_no);
        }
        if (tokens.size() < 2) {
          throw Error(ErrorKind::MalformedLexiconLine, "entry has no category ids", line_no);
        }
        std::string_view pattern = tokens[0];
        const bool prefix = pattern.back() == '*';
        if (prefix) pattern.remove_suffix(1);
        if (pattern.empty()) {
          throw Error(ErrorKind::MalformedLexiconLine, "bare '*' pattern", line_no);
        }
        for (std::size_t k = 1; k < tokens.size(); ++k) {
          long id;
          if (!parse_id(tokens[k], id)) {
            throw Error(ErrorKind::MalformedLexiconLine,
                        "bad category id '" + std::string(tokens[k]) + "'", line_no);
          }
          auto cat = categories.find(id);
          if (cat == categories.end()) {
            throw Error(ErrorKind::UnknownCategoryId,
                        "category id " + std::to_string(id) + " is not declared", line_no);
          }
          at_line(line_no, [&] {
            prefix ? builder.add_prefix(pattern, cat->second)
                   : builder.add_exact(pattern, cat->second);
          });
        }
        break;
      }
    }
  }
  if (section != Section::Body) {
    throw Error(ErrorKind::MissingDelimiter, "dictionary needs two '%' delimiter lines");
  }
  return builder.build();
}

void emit_liwc(std::ostream& out, const Lexicon& lexicon) {
  out << "%\n";
  for (std::size_t i = 0; i < lexicon.labels().size(); ++i) {
    out << (i + 1) << '\t' << lexicon.labels()[i] << '\n';
  }
  out << "%\n";
  // Group ids per rendered pattern ("word" or "word*").
  std::map<std::string, std::vector<std::size_t>> body;
  const auto& labels = lexicon.labels();
  for (const auto& e : lexicon.entries()) {
    const auto id = std::lower_bound(labels.begin(), labels.end(), e.label) - labels.begin() + 1;
    body[e.is_prefix ? e.pattern + "*" : e.pattern].push_back(static_cast<std::size_t>(id));
  }
  for (const auto& [pattern, ids] : body) {
    out << pattern;
    for (auto id : ids) out << '\t' << id;
    out << '\n';
  }
}

}  // namespace lex2vec
