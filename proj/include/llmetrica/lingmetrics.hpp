#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "llmetrica/lexicons.hpp"
#include "llmetrica/text.hpp"

namespace llmetrica {

/// The ten general linguistic metrics, in report column order.
enum class Metric { AWL, LWR, SWR, TTR, ASL, DRV, SCD, FRE, PS, SS };
inline constexpr std::size_t kMetricCount = 10;
inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::AWL, Metric::LWR, Metric::SWR, Metric::TTR, Metric::ASL,
    Metric::DRV, Metric::SCD, Metric::FRE, Metric::PS,  Metric::SS};

std::string_view metric_name(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

/// Metric values; an empty slot means the metric is unavailable for the
/// document (DRV/SCD without syntax, word metrics without alphabetic tokens).
class MetricVector {
 public:
  std::optional<double> get(Metric m) const { return values_[static_cast<std::size_t>(m)]; }
  void set(Metric m, double v) { values_[static_cast<std::size_t>(m)] = v; }
  bool available(Metric m) const { return get(m).has_value(); }
  std::size_t available_count() const;

  bool operator==(const MetricVector&) const = default;

 private:
  std::array<std::optional<double>, kMetricCount> values_{};
};

struct MetricOptions {
  int long_word_letters = 10;
  const SentimentLexicon* lexicon = nullptr;  // null = bundled lexicon
};

double awl(const AnnotatedDocument& doc);
double lwr(const AnnotatedDocument& doc, int long_word_letters = 10);
double swr(const AnnotatedDocument& doc);
double ttr(const AnnotatedDocument& doc);
double asl(const AnnotatedDocument& doc);
/// Shannon entropy (bits) of the dependency-relation label distribution.
double drv(const AnnotatedDocument& doc);
/// Tokens with a subordinate-clause relation (advcl, ccomp, xcomp, relcl, acl,
/// matched on base label or subtype) per sentence.
double scd(const AnnotatedDocument& doc);
double fre(const AnnotatedDocument& doc);

struct Sentiment {
  double polarity = 0.0;
  double subjectivity = 0.0;
};
Sentiment sentiment(const AnnotatedDocument& doc, const SentimentLexicon& lexicon = SentimentLexicon::bundled());

/// True for relation labels that mark a subordinate clause.
bool is_subordinate_relation(std::string_view deprel);

MetricVector metric_vector(const AnnotatedDocument& doc, const MetricOptions& options = {});

enum class Direction { Up, Down, Flat };

/// "↑", "↓" or "→".
std::string_view direction_symbol(Direction d);

struct DirectionRow {
  Metric metric;
  Direction direction = Direction::Flat;
  double human_mean = 0.0;
  std::map<std::string, double> llm_means;  // group name -> mean
};

struct DirectionTable {
  std::vector<DirectionRow> rows;  // metrics available in every group, in kAllMetrics order
  std::optional<Direction> direction(Metric m) const;
};

/// Compares each LLM group's mean to the human mean per metric: Up iff every
/// LLM mean is strictly greater, Down iff every one is strictly smaller.
/// Throws InputError for empty groups or mismatched metric availability.
DirectionTable direction_table(const std::vector<MetricVector>& human_group,
                               const std::map<std::string, std::vector<MetricVector>>& llm_groups);

}  // namespace llmetrica
