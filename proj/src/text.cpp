#include "llmetrica/text.hpp"

#include <algorithm>

#include "llmetrica/errors.hpp"
#include "utf8.hpp"

namespace llmetrica {

namespace {

bool is_word_char(char32_t c) { return utf8::is_letter(c) || (c >= '0' && c <= '9') || c == '_'; }
bool is_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_ascii_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_ascii_consonant(char c) { return c >= 'a' && c <= 'z' && !is_ascii_vowel(c); }

bool is_closing(char32_t c) {
  return c == ')' || c == ']' || c == '"' || c == '\'' || c == 0x201D || c == 0x2019;
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

// True when text[pos, pos+len) is preceded by start-of-text, whitespace or an opening bracket.
bool at_word_start(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  const char prev = text[pos - 1];
  return prev == ' ' || prev == '\t' || prev == '\n' || prev == '\r' || prev == '(' || prev == '[';
}

bool ends_with_guard(std::string_view text, std::size_t period_pos) {
  for (const auto& guard : abbreviation_guards()) {
    if (guard.size() > period_pos + 1) continue;
    const std::size_t begin = period_pos + 1 - guard.size();
    bool same = true;
    for (std::size_t k = 0; k < guard.size() && same; ++k)
      same = ascii_lower(text[begin + k]) == guard[k];
    if (same && at_word_start(text, begin)) return true;
  }
  return false;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const auto cp = utf8::decode(s, i);
    if (cp.value == 0xFFFD && cp.length == 1) {
      out.push_back(s[i]);
    } else {
      utf8::append(out, utf8::to_lower(cp.value));
    }
    i += cp.length;
  }
  return out;
}

bool is_alphabetic_word(std::string_view s) {
  if (s.empty()) return false;
  bool prev_letter = false;
  for (std::size_t i = 0; i < s.size();) {
    const auto cp = utf8::decode(s, i);
    i += cp.length;
    if (utf8::is_letter(cp.value)) {
      prev_letter = true;
    } else if (utf8::is_apostrophe(cp.value) && prev_letter && i < s.size() &&
               utf8::is_letter(utf8::decode(s, i).value)) {
      prev_letter = false;
    } else {
      return false;
    }
  }
  return true;
}

int count_letters(std::string_view s) {
  int n = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto cp = utf8::decode(s, i);
    n += utf8::is_letter(cp.value) ? 1 : 0;
    i += cp.length;
  }
  return n;
}

int count_syllables(std::string_view word) {
  if (!is_alphabetic_word(word))
    throw DomainError("count_syllables: not an alphabetic word: '" + std::string(word) + "'");
  const std::string w = to_lower(word);
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    const bool vowel = is_ascii_vowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  // Silent terminal 'e': a lone final 'e' after a consonant, except consonant + "le".
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == 'e' && is_ascii_consonant(w[n - 2])) {
    const bool consonant_le = w[n - 2] == 'l' && n >= 3 && is_ascii_consonant(w[n - 3]);
    if (!consonant_le) --groups;
  }
  return std::max(groups, 1);
}

Token make_token(std::string form) {
  Token t;
  t.lower = to_lower(form);
  t.is_alphabetic = is_alphabetic_word(form);
  t.letter_count = count_letters(form);
  t.syllables = t.is_alphabetic ? count_syllables(form) : 0;
  t.form = std::move(form);
  return t;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::string word;
  char32_t last = 0;
  auto flush = [&] {
    if (!word.empty()) out.push_back(make_token(std::move(word)));
    word.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    const auto cp = utf8::decode(text, i);
    const std::size_t next = i + cp.length;
    const char32_t after = next < text.size() ? utf8::decode(text, next).value : 0;
    if (utf8::is_space(cp.value)) {
      flush();
    } else if (is_word_char(cp.value)) {
      word.append(text.substr(i, cp.length));
    } else if (!word.empty() && utf8::is_apostrophe(cp.value) && utf8::is_letter(last) &&
               utf8::is_letter(after)) {
      word.append(text.substr(i, cp.length));
    } else if (!word.empty() && (cp.value == '.' || cp.value == ',') && is_digit(last) &&
               is_digit(after)) {
      word.append(text.substr(i, cp.length));
    } else {
      flush();
      out.push_back(make_token(std::string(text.substr(i, cp.length))));
    }
    last = cp.value;
    i = next;
  }
  flush();
  return out;
}

const std::vector<std::string>& abbreviation_guards() {
  static const std::vector<std::string> guards = {
      "e.g.", "i.e.", "et al.", "fig.", "figs.", "eq.", "eqs.", "sec.", "cf.",
      "vs.",  "dr.",  "mr.",    "mrs.", "ms.",   "no.", "tab.", "approx."};
  return guards;
}

std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  auto skip_space = [&](std::size_t pos) {
    while (pos < text.size()) {
      const auto cp = utf8::decode(text, pos);
      if (!utf8::is_space(cp.value)) break;
      pos += cp.length;
    }
    return pos;
  };

  std::size_t start = skip_space(0);
  std::size_t i = start;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      i += utf8::decode(text, i).length;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && (text[end] == '.' || text[end] == '!' || text[end] == '?')) ++end;
    const bool single_period = (end - i == 1) && c == '.';
    while (end < text.size()) {
      const auto cp = utf8::decode(text, end);
      if (!is_closing(cp.value)) break;
      end += cp.length;
    }
    if (single_period && ends_with_guard(text, i)) {
      i = end;
      continue;
    }
    const std::size_t next = skip_space(end);
    bool boundary = next >= text.size();
    if (!boundary && next > end) boundary = utf8::is_upper(utf8::decode(text, next).value);
    if (boundary) {
      spans.emplace_back(start, end);
      start = next;
    }
    i = std::max(end, next);
  }
  if (start < text.size()) {
    std::size_t stop = start;
    for (std::size_t p = start; p < text.size();) {
      const auto cp = utf8::decode(text, p);
      p += cp.length;
      if (!utf8::is_space(cp.value)) stop = p;
    }
    if (stop > start) spans.emplace_back(start, stop);
  }
  return spans;
}

std::string_view AnnotatedDocument::sentence_text(std::size_t i) const {
  const auto [b, e] = sentences.at(i).char_span;
  if (e > text.size() || b > e) return {};
  return std::string_view(text).substr(b, e - b);
}

}  // namespace llmetrica
