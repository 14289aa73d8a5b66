#include "llmetrica/lexicons.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "llmetrica/errors.hpp"
#include "llmetrica/text.hpp"

namespace llmetrica {

namespace data {
std::string_view stopwords_text();
std::string_view sentiment_lexicon_text();
}  // namespace data

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    fn(++line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

double parse_double(std::string_view s, const std::string& source, std::size_t line) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError(source, line, "not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::unordered_set<std::string> parse_word_list(std::string_view text) {
  std::unordered_set<std::string> words;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    words.insert(to_lower(line));
  });
  return words;
}

const std::unordered_set<std::string>& stopwords() {
  static const auto list = parse_word_list(data::stopwords_text());
  return list;
}

bool is_stopword(std::string_view lower) { return stopwords().count(std::string(lower)) > 0; }

SentimentLexicon SentimentLexicon::parse(std::string_view tsv, const std::string& source) {
  SentimentLexicon lex;
  for_each_line(tsv, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty() || trim(line).front() == '#') return;
    std::vector<std::string_view> cols;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      cols.push_back(trim(line.substr(pos, tab == std::string_view::npos ? tab : tab - pos)));
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (cols.size() != 3)
      throw ParseError(source, line_no, "expected 3 tab-separated columns, got " + std::to_string(cols.size()));
    const double polarity = parse_double(cols[1], source, line_no);
    const double subjectivity = parse_double(cols[2], source, line_no);
    if (polarity < -1.0 || polarity > 1.0) throw ParseError(source, line_no, "polarity outside [-1, 1]");
    if (subjectivity < 0.0 || subjectivity > 1.0)
      throw ParseError(source, line_no, "subjectivity outside [0, 1]");
    lex.insert(to_lower(cols[0]), {polarity, subjectivity});
  });
  return lex;
}

const SentimentLexicon& SentimentLexicon::bundled() {
  static const auto lex = parse(data::sentiment_lexicon_text(), "sentiment_lexicon.tsv");
  return lex;
}

std::optional<SentimentEntry> SentimentLexicon::lookup(const std::string& lower) const {
  const auto it = entries_.find(lower);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace llmetrica
