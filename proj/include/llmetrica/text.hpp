#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace llmetrica {

/// One token. Word-level fields are derived from `form`; syntax fields come
/// from CoNLL-U annotations and are empty for locally tokenized text.
struct Token {
  std::string form;
  std::string lower;
  bool is_alphabetic = false;
  int letter_count = 0;
  int syllables = 0;  // >= 1 iff is_alphabetic
  std::optional<std::string> upos;
  std::optional<std::string> deprel;
  std::optional<int> head;  // 0 = root
  // Remaining CoNLL-U columns, kept verbatim for lossless re-serialization.
  std::string lemma = "_";
  std::string xpos = "_";
  std::string feats = "_";
  std::string deps = "_";
  std::string misc = "_";

  bool has_syntax() const { return upos && deprel && head; }
  bool operator==(const Token&) const = default;
};

/// Builds a token with all word-level fields derived from `form`.
Token make_token(std::string form);

struct Sentence {
  std::vector<Token> tokens;
  std::pair<std::size_t, std::size_t> char_span{0, 0};  // [start, end) bytes into the source text

  bool operator==(const Sentence&) const = default;
};

struct AnnotatedDocument {
  std::string document_id;
  std::string text;
  std::vector<Sentence> sentences;
  bool has_syntax = false;

  std::string_view sentence_text(std::size_t i) const;
  bool operator==(const AnnotatedDocument&) const = default;
};

/// Splits on whitespace and punctuation. Letters, digits and underscores form
/// word tokens; an apostrophe between two letters stays inside the word;
/// every other non-space code point (hyphens included) is its own token.
std::vector<Token> tokenize(std::string_view text);

/// Sentence boundaries: '.', '!' or '?' (runs allowed, trailing closing
/// quotes/brackets absorbed) followed by whitespace and an uppercase letter,
/// or by end of text. Periods ending a guarded abbreviation never split.
/// Spans are trimmed, ordered, disjoint, and cover all non-space text.
std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text);

/// Abbreviations that never terminate a sentence (matched case-insensitively).
const std::vector<std::string>& abbreviation_guards();

/// Vowel-group syllable heuristic. Throws DomainError for non-alphabetic input.
int count_syllables(std::string_view word);

/// Case-folds letters (ASCII and Latin-1/Latin Extended-A); other bytes unchanged.
std::string to_lower(std::string_view s);

/// True iff `s` is non-empty and consists solely of letters, allowing
/// apostrophes strictly between letters.
bool is_alphabetic_word(std::string_view s);

/// Number of letter code points in `s`.
int count_letters(std::string_view s);

bool is_stopword(std::string_view lower);

}  // namespace llmetrica
