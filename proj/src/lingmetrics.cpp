#include "llmetrica/lingmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "llmetrica/errors.hpp"

namespace llmetrica {

namespace {

constexpr std::array<std::string_view, kMetricCount> kNames = {"AWL", "LWR", "SWR", "TTR", "ASL",
                                                                "DRV", "SCD", "FRE", "PS",  "SS"};

template <typename Fn>
void for_each_word(const AnnotatedDocument& doc, Fn&& fn) {
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens)
      if (t.is_alphabetic) fn(t);
}

std::size_t word_count(const AnnotatedDocument& doc) {
  std::size_t n = 0;
  for_each_word(doc, [&](const Token&) { ++n; });
  return n;
}

std::size_t require_words(const AnnotatedDocument& doc, const char* metric) {
  const auto n = word_count(doc);
  if (n == 0) throw DomainError(std::string(metric) + ": document '" + doc.document_id + "' has no alphabetic tokens");
  return n;
}

void require_sentences(const AnnotatedDocument& doc, const char* metric) {
  if (doc.sentences.empty())
    throw DomainError(std::string(metric) + ": document '" + doc.document_id + "' has no sentences");
}

void require_syntax(const AnnotatedDocument& doc, const char* metric) {
  if (!doc.has_syntax)
    throw DomainError(std::string(metric) + ": syntax unavailable for document '" + doc.document_id + "'");
}

// Sum of a sorted copy, so group means do not depend on document order.
double order_free_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

}  // namespace

std::string_view metric_name(Metric m) { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Metric> parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics)
    if (metric_name(m) == name) return m;
  return std::nullopt;
}

std::size_t MetricVector::available_count() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

double awl(const AnnotatedDocument& doc) {
  const auto n = require_words(doc, "AWL");
  long letters = 0;
  for_each_word(doc, [&](const Token& t) { letters += t.letter_count; });
  return static_cast<double>(letters) / static_cast<double>(n);
}

double lwr(const AnnotatedDocument& doc, int long_word_letters) {
  const auto n = require_words(doc, "LWR");
  std::size_t longs = 0;
  for_each_word(doc, [&](const Token& t) { longs += t.letter_count >= long_word_letters ? 1 : 0; });
  return static_cast<double>(longs) / static_cast<double>(n);
}

double swr(const AnnotatedDocument& doc) {
  const auto n = require_words(doc, "SWR");
  std::size_t stops = 0;
  for_each_word(doc, [&](const Token& t) { stops += is_stopword(t.lower) ? 1 : 0; });
  return static_cast<double>(stops) / static_cast<double>(n);
}

double ttr(const AnnotatedDocument& doc) {
  const auto n = require_words(doc, "TTR");
  std::unordered_set<std::string> types;
  for_each_word(doc, [&](const Token& t) { types.insert(t.lower); });
  return static_cast<double>(types.size()) / static_cast<double>(n);
}

double asl(const AnnotatedDocument& doc) {
  require_sentences(doc, "ASL");
  return static_cast<double>(word_count(doc)) / static_cast<double>(doc.sentences.size());
}

double drv(const AnnotatedDocument& doc) {
  require_syntax(doc, "DRV");
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens)
      if (t.deprel) {
        ++counts[*t.deprel];
        ++total;
      }
  if (total == 0) throw DomainError("DRV: no dependency labels in document '" + doc.document_id + "'");
  // Accumulate in label order for reproducible rounding.
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  double h = 0.0;
  for (const auto& [label, c] : sorted) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;
}

bool is_subordinate_relation(std::string_view deprel) {
  static constexpr std::array<std::string_view, 5> kLabels = {"advcl", "ccomp", "xcomp", "relcl", "acl"};
  auto listed = [](std::string_view s) { return std::find(kLabels.begin(), kLabels.end(), s) != kLabels.end(); };
  const auto colon = deprel.find(':');
  if (colon == std::string_view::npos) return listed(deprel);
  return listed(deprel.substr(0, colon)) || listed(deprel.substr(colon + 1));
}

double scd(const AnnotatedDocument& doc) {
  require_syntax(doc, "SCD");
  require_sentences(doc, "SCD");
  std::size_t n = 0;
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens)
      if (t.deprel && is_subordinate_relation(*t.deprel)) ++n;
  return static_cast<double>(n) / static_cast<double>(doc.sentences.size());
}

double fre(const AnnotatedDocument& doc) {
  require_sentences(doc, "FRE");
  const auto words = require_words(doc, "FRE");
  long syllables = 0;
  for_each_word(doc, [&](const Token& t) { syllables += t.syllables; });
  const double w = static_cast<double>(words);
  return 206.835 - 1.015 * (w / static_cast<double>(doc.sentences.size())) -
         84.6 * (static_cast<double>(syllables) / w);
}

Sentiment sentiment(const AnnotatedDocument& doc, const SentimentLexicon& lexicon) {
  double polarity = 0.0, subjectivity = 0.0;
  std::size_t hits = 0;
  for_each_word(doc, [&](const Token& t) {
    if (const auto e = lexicon.lookup(t.lower)) {
      polarity += e->polarity;
      subjectivity += e->subjectivity;
      ++hits;
    }
  });
  if (hits == 0) return {};
  return {polarity / static_cast<double>(hits), subjectivity / static_cast<double>(hits)};
}

MetricVector metric_vector(const AnnotatedDocument& doc, const MetricOptions& options) {
  MetricVector v;
  const bool words = word_count(doc) > 0;
  if (words) {
    v.set(Metric::AWL, awl(doc));
    v.set(Metric::LWR, lwr(doc, options.long_word_letters));
    v.set(Metric::SWR, swr(doc));
    v.set(Metric::TTR, ttr(doc));
  }
  if (!doc.sentences.empty()) {
    v.set(Metric::ASL, asl(doc));
    if (words) v.set(Metric::FRE, fre(doc));
    if (doc.has_syntax) {
      v.set(Metric::DRV, drv(doc));
      v.set(Metric::SCD, scd(doc));
    }
  }
  const auto s = sentiment(doc, options.lexicon ? *options.lexicon : SentimentLexicon::bundled());
  v.set(Metric::PS, s.polarity);
  v.set(Metric::SS, s.subjectivity);
  return v;
}

std::string_view direction_symbol(Direction d) {
  switch (d) {
    case Direction::Up: return "↑";
    case Direction::Down: return "↓";
    case Direction::Flat: return "→";
  }
  return "?";
}

std::optional<Direction> DirectionTable::direction(Metric m) const {
  for (const auto& r : rows)
    if (r.metric == m) return r.direction;
  return std::nullopt;
}

DirectionTable direction_table(const std::vector<MetricVector>& human_group,
                               const std::map<std::string, std::vector<MetricVector>>& llm_groups) {
  if (human_group.empty()) throw InputError("direction_table: human group is empty");
  if (llm_groups.empty()) throw InputError("direction_table: no LLM groups");
  for (const auto& [name, group] : llm_groups)
    if (group.empty()) throw InputError("direction_table: LLM group '" + name + "' is empty");

  DirectionTable table;
  for (Metric m : kAllMetrics) {
    const bool expected = human_group.front().available(m);
    auto check = [&](const std::vector<MetricVector>& group, const std::string& name) {
      for (const auto& v : group)
        if (v.available(m) != expected)
          throw InputError("direction_table: availability of " + std::string(metric_name(m)) +
                           " differs within group '" + name + "'");
    };
    check(human_group, "human");
    for (const auto& [name, group] : llm_groups) check(group, name);
    if (!expected) continue;

    auto mean_of = [&](const std::vector<MetricVector>& group) {
      std::vector<double> values;
      values.reserve(group.size());
      for (const auto& v : group) values.push_back(*v.get(m));
      return order_free_mean(std::move(values));
    };
    DirectionRow row{m, Direction::Flat, mean_of(human_group), {}};
    bool all_up = true, all_down = true;
    for (const auto& [name, group] : llm_groups) {
      const double mean = mean_of(group);
      row.llm_means[name] = mean;
      all_up = all_up && mean > row.human_mean;
      all_down = all_down && mean < row.human_mean;
    }
    row.direction = all_up ? Direction::Up : all_down ? Direction::Down : Direction::Flat;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace llmetrica
