#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace llmetrica {

/// Parses a one-token-per-line list ('#' comments, blank lines ignored).
std::unordered_set<std::string> parse_word_list(std::string_view text);

/// The bundled 179-entry English stopword list.
const std::unordered_set<std::string>& stopwords();

struct SentimentEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

class SentimentLexicon {
 public:
  /// TSV `word<TAB>polarity<TAB>subjectivity`, '#' comments. Out-of-range
  /// values and malformed rows raise ParseError with the line number.
  static SentimentLexicon parse(std::string_view tsv, const std::string& source = "<lexicon>");

  /// The lexicon compiled into the library.
  static const SentimentLexicon& bundled();

  void insert(std::string word, SentimentEntry entry) { entries_[std::move(word)] = entry; }
  std::optional<SentimentEntry> lookup(const std::string& lower) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, SentimentEntry> entries_;
};

}  // namespace llmetrica
