#include "llmetrica/wordpref.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "llmetrica/errors.hpp"
#include "llmetrica/student_t.hpp"

namespace llmetrica {

WelchResult welch_test(long cnt_h, long cnt_l, long n, const WelchOptions& options) {
  if (n < 2) throw DomainError("welch_test: need at least two pairs (n = " + std::to_string(n) + ")");
  if (cnt_h < 0 || cnt_h > n || cnt_l < 0 || cnt_l > n)
    throw DomainError("welch_test: counts must lie in [0, n]");
  const double size = static_cast<double>(n);

  WelchResult r;
  r.p_h = (static_cast<double>(cnt_h) + options.eps) / size;
  r.p_l = (static_cast<double>(cnt_l) + options.eps) / size;
  const double var_h = std::max(0.0, r.p_h * (1.0 - r.p_h) / size);
  const double var_l = std::max(0.0, r.p_l * (1.0 - r.p_l) / size);
  r.s_h = std::sqrt(var_h);
  r.s_l = std::sqrt(var_l);

  if (var_h + var_l == 0.0) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    r.t = r.df = r.t_crit = nan;
    r.degenerate = true;
    return r;
  }

  double se2, df_denominator;
  if (options.mode == StandardErrorMode::AsPublished) {
    se2 = (var_h + var_l) / size;
    const double a = var_h / size, b = var_l / size;
    df_denominator = (a * a + b * b) / (size - 1.0);
  } else {
    se2 = var_h + var_l;
    df_denominator = (var_h * var_h + var_l * var_l) / (size - 1.0);
  }
  r.t = (r.p_l - r.p_h) / std::sqrt(se2);
  r.df = se2 * se2 / df_denominator;
  r.t_crit = t_quantile(r.df, options.alpha);
  r.preferred = r.t > r.t_crit;
  return r;
}

double wuir(long cnt_h, long cnt_l, double eps) {
  return static_cast<double>(cnt_l - cnt_h) / (static_cast<double>(cnt_h) + eps);
}

namespace {

void require_pos(const AnnotatedDocument& doc) {
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens)
      if (!t.upos)
        throw DomainError("document '" + doc.document_id + "' lacks POS annotations (token '" + t.form + "')");
}

}  // namespace

std::vector<WordUnit> document_units(const AnnotatedDocument& doc) {
  require_pos(doc);
  std::set<WordUnit> units;
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens)
      if (t.is_alphabetic && !is_stopword(t.lower)) units.insert({t.lower, *t.upos});
  return {units.begin(), units.end()};
}

std::size_t doc_frequency(const std::vector<AnnotatedDocument>& docs, const WordUnit& unit) {
  if (!is_alphabetic_word(unit.word) || to_lower(unit.word) != unit.word)
    throw DomainError("doc_frequency: unit '" + unit.word + "' is not a lowercase alphabetic word");
  if (is_stopword(unit.word)) throw DomainError("doc_frequency: '" + unit.word + "' is a stopword");
  std::size_t n = 0;
  for (const auto& doc : docs) {
    const auto units = document_units(doc);
    n += std::binary_search(units.begin(), units.end(), unit) ? 1 : 0;
  }
  return n;
}

std::vector<WordStat> word_statistics(const std::vector<AnnotatedPair>& pairs, const WordPrefOptions& options) {
  if (pairs.empty()) throw DomainError("word preference analysis needs at least one pair");
  std::map<WordUnit, std::pair<long, long>> counts;
  for (const auto& p : pairs) {
    if (!p.human || !p.llm) throw DomainError("word preference analysis: incomplete pair");
    for (auto& u : document_units(*p.human)) ++counts[u].first;
    for (auto& u : document_units(*p.llm)) ++counts[u].second;
  }
  const long n = static_cast<long>(pairs.size());

  // Many units share a count pair; the quantile search dominates runtime.
  std::map<std::pair<long, long>, WelchResult> tests;
  std::vector<WordStat> stats;
  stats.reserve(counts.size());
  for (const auto& [unit, c] : counts) {
    auto it = tests.find(c);
    if (it == tests.end()) it = tests.emplace(c, welch_test(c.first, c.second, n, options.welch)).first;
    WordStat s;
    s.unit = unit;
    s.cnt_h = c.first;
    s.cnt_l = c.second;
    s.test = it->second;
    s.wuir = wuir(c.first, c.second, options.welch.eps);
    s.is_long = count_letters(unit.word) >= options.long_word_letters;
    s.is_complex = count_syllables(unit.word) >= options.complex_syllables;
    stats.push_back(std::move(s));
  }
  std::stable_sort(stats.begin(), stats.end(), [](const WordStat& a, const WordStat& b) {
    if (a.wuir != b.wuir) return a.wuir > b.wuir;
    return a.unit < b.unit;
  });
  return stats;
}

PreferredWordSet preferred_words(const std::vector<AnnotatedPair>& pairs, const WordPrefOptions& options) {
  PreferredWordSet set;
  for (auto& s : word_statistics(pairs, options))
    if (s.test.preferred) set.entries.push_back(std::move(s));
  for (const auto& p : pairs) {
    set.human_ids.push_back(p.human->document_id);
    set.llm_ids.push_back(p.llm->document_id);
  }
  return set;
}

double set_coverage(const AnnotatedDocument& doc, const std::vector<WordUnit>& set) {
  if (set.empty()) throw DomainError("set_coverage: the preferred word set is empty");
  const auto units = document_units(doc);
  const std::set<WordUnit> distinct(set.begin(), set.end());
  std::size_t hits = 0;
  for (const auto& u : distinct) hits += std::binary_search(units.begin(), units.end(), u) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(distinct.size());
}

double set_coverage(const AnnotatedDocument& doc, const PreferredWordSet& set) {
  std::vector<WordUnit> units;
  for (const auto& e : set.entries) units.push_back(e.unit);
  return set_coverage(doc, units);
}

}  // namespace llmetrica
