#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "llmetrica/corpus.hpp"
#include "llmetrica/evaluation.hpp"
#include "llmetrica/lingmetrics.hpp"
#include "llmetrica/patterns.hpp"
#include "llmetrica/semmetrics.hpp"
#include "llmetrica/trend.hpp"
#include "llmetrica/wordpref.hpp"

namespace llmetrica {

/// Fixed six decimals; "NaN"/"inf" for non-finite values and no negative zero.
std::string format_real(double v);
/// format_real, or "NA" when the value is unavailable.
std::string format_real(const std::optional<double>& v);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(std::string_view s);

class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header) : width_(header.size()) { row(header); }
  /// Throws std::logic_error on a width mismatch.
  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return out_; }

 private:
  std::size_t width_;
  std::string out_;
};

/// Copy of `j` with every floating-point number rounded to six decimals.
nlohmann::ordered_json round_reals(const nlohmann::ordered_json& j);

/// Writes `content` to `path`, creating parent directories. Throws InputError.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Report tables. Every function returns the full CSV text.

std::string metrics_csv(const std::vector<const Document*>& docs, const std::vector<MetricVector>& vectors);

struct DirectionSection {
  Kind kind;
  DirectionTable table;
};
std::string direction_csv(const std::vector<DirectionSection>& sections);

struct SemanticRow {
  std::string paper_id;
  std::string variant_id;  // substituted LLM document, or "-" for the original bundle
  std::string provenance;  // of the substituted document, "human"/"unknown" otherwise
  SemanticReport report;
};
std::string semantic_csv(const std::vector<SemanticRow>& rows);
std::string semantic_reviews_csv(const std::vector<SemanticRow>& rows, const Corpus& corpus);

std::string wordstats_csv(const std::vector<WordStat>& stats);
std::string wordpref_csv(const PreferredWordSet& set);

std::string pattern_counts_csv(const std::vector<PatternCounts>& counts);
struct PatternGroup {
  std::string name;
  std::vector<PatternCounts> counts;
};
std::string patterns_csv(const std::vector<PatternGroup>& groups);

std::string penetration_csv(const PenetrationReport& report);
std::string trend_csv(const TrendReport& report);

}  // namespace llmetrica
