#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "llmetrica/text.hpp"

namespace llmetrica {

/// How the standard error of the proportion difference is formed.
enum class StandardErrorMode {
  AsPublished,  // sqrt((s_h^2 + s_l^2) / n) with s^2 = p(1-p)/n, df to match
  Textbook,     // sqrt(s_h^2 + s_l^2), the usual two-proportion Welch form
};

struct WelchOptions {
  double alpha = 0.05;
  double eps = 1.0;
  StandardErrorMode mode = StandardErrorMode::AsPublished;
};

struct WelchResult {
  double p_h = 0.0;
  double p_l = 0.0;
  double s_h = 0.0;
  double s_l = 0.0;
  double t = 0.0;
  double df = 0.0;
  double t_crit = 0.0;
  bool preferred = false;
  bool degenerate = false;  // s_h = s_l = 0: t, df and t_crit are NaN
};

/// One-sided Welch test of H1: p_l > p_h on smoothed document proportions
/// p = (cnt + eps) / n. Variances p(1-p)/n are floored at zero (p exceeds 1
/// when cnt = n). Throws DomainError unless n >= 2 and 0 <= cnt <= n.
WelchResult welch_test(long cnt_h, long cnt_l, long n, const WelchOptions& options = {});

/// Word usage increase ratio (cnt_l - cnt_h) / (cnt_h + eps).
double wuir(long cnt_h, long cnt_l, double eps = 1.0);

/// The analysis unit: a lowercased alphabetic non-stopword with its UPOS tag.
struct WordUnit {
  std::string word;
  std::string pos;
  auto operator<=>(const WordUnit&) const = default;
};

/// Number of documents containing the unit at least once. Requires UPOS on
/// every token; stopword or non-alphabetic units are rejected.
std::size_t doc_frequency(const std::vector<AnnotatedDocument>& docs, const WordUnit& unit);

struct WordStat {
  WordUnit unit;
  long cnt_h = 0;
  long cnt_l = 0;
  WelchResult test;
  double wuir = 0.0;
  bool is_long = false;
  bool is_complex = false;
};

struct AnnotatedPair {
  const AnnotatedDocument* human = nullptr;
  const AnnotatedDocument* llm = nullptr;
};

struct WordPrefOptions {
  WelchOptions welch;
  int long_word_letters = 10;
  int complex_syllables = 3;
};

/// Statistics for every unit occurring on either side, n = number of pairs,
/// ordered by WUIR descending then (word, pos).
std::vector<WordStat> word_statistics(const std::vector<AnnotatedPair>& pairs, const WordPrefOptions& options = {});

struct PreferredWordSet {
  std::vector<WordStat> entries;  // preferred only, WUIR descending, ties by (word, pos)
  std::vector<std::string> human_ids;
  std::vector<std::string> llm_ids;
  std::string kind;
  std::string model;
};

PreferredWordSet preferred_words(const std::vector<AnnotatedPair>& pairs, const WordPrefOptions& options = {});

/// Fraction of the set's units present in the document.
double set_coverage(const AnnotatedDocument& doc, const std::vector<WordUnit>& set);
double set_coverage(const AnnotatedDocument& doc, const PreferredWordSet& set);

/// Units (lowercase, alphabetic, non-stopword) present in a POS-annotated
/// document. Throws DomainError if any token lacks UPOS.
std::vector<WordUnit> document_units(const AnnotatedDocument& doc);

}  // namespace llmetrica
