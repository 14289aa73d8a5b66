#include "llmetrica/reports.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "llmetrica/errors.hpp"
#include "llmetrica/text.hpp"

namespace llmetrica {

std::string format_real(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string format_real(const std::optional<double>& v) { return v ? format_real(*v) : "NA"; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw std::logic_error("csv row width mismatch");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ += ',';
    out_ += csv_field(fields[i]);
  }
  out_ += '\n';
}

nlohmann::ordered_json round_reals(const nlohmann::ordered_json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return j;
    const double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;
  }
  if (j.is_array() || j.is_object()) {
    nlohmann::ordered_json out = j;
    for (auto& v : out) v = round_reals(v);
    return out;
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string metrics_csv(const std::vector<const Document*>& docs, const std::vector<MetricVector>& vectors) {
  if (docs.size() != vectors.size()) throw std::logic_error("metrics_csv: size mismatch");
  std::vector<std::string> header = {"id", "paper_id", "kind", "provenance", "venue", "year"};
  for (Metric m : kAllMetrics) header.emplace_back(metric_name(m));
  CsvWriter csv(header);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const Document& d = *docs[i];
    std::vector<std::string> row = {d.id,    d.paper_id, std::string(to_string(d.kind)), d.provenance.label(),
                                    d.venue, std::to_string(d.year)};
    for (Metric m : kAllMetrics) row.push_back(format_real(vectors[i].get(m)));
    csv.row(row);
  }
  return csv.str();
}

std::string direction_csv(const std::vector<DirectionSection>& sections) {
  CsvWriter csv({"kind", "metric", "direction", "human_mean", "group", "group_mean"});
  for (const auto& s : sections)
    for (const auto& row : s.table.rows)
      for (const auto& [group, mean] : row.llm_means)
        csv.row({std::string(to_string(s.kind)), std::string(metric_name(row.metric)),
                 std::string(direction_symbol(row.direction)), format_real(row.human_mean), group,
                 format_real(mean)});
  return csv.str();
}

std::string semantic_csv(const std::vector<SemanticRow>& rows) {
  CsvWriter csv({"paper_id", "variant", "provenance", "n_reviews", "mrsim", "rsim", "meta_specificity", "skipped"});
  for (const auto& r : rows) {
    std::string skipped;
    for (const auto& s : r.report.skipped) skipped += (skipped.empty() ? "" : "; ") + s;
    csv.row({r.paper_id, r.variant_id, r.provenance, std::to_string(r.report.review_specificity.size()),
             format_real(r.report.mrsim), format_real(r.report.rsim), format_real(r.report.meta_specificity),
             skipped});
  }
  return csv.str();
}

std::string semantic_reviews_csv(const std::vector<SemanticRow>& rows, const Corpus& corpus) {
  CsvWriter csv({"paper_id", "variant", "review_id", "provenance", "specificity"});
  for (const auto& r : rows)
    for (const auto& [id, value] : r.report.review_specificity) {
      const Document* d = corpus.find(id);
      csv.row({r.paper_id, r.variant_id, id, d ? d->provenance.label() : "unknown", format_real(value)});
    }
  return csv.str();
}

namespace {

std::vector<std::string> word_stat_fields(const WordStat& s) {
  return {s.unit.word,
          s.unit.pos,
          std::to_string(s.cnt_h),
          std::to_string(s.cnt_l),
          format_real(s.test.p_h),
          format_real(s.test.p_l),
          format_real(s.test.t),
          format_real(s.test.df),
          format_real(s.test.t_crit),
          s.test.preferred ? "1" : "0",
          s.test.degenerate ? "1" : "0",
          format_real(s.wuir),
          s.is_long ? "1" : "0",
          s.is_complex ? "1" : "0"};
}

const std::vector<std::string> kWordStatHeader = {"word", "pos", "cnt_h", "cnt_l",     "p_h",        "p_l",
                                                  "t",    "df",  "t_crit", "preferred", "degenerate", "wuir",
                                                  "long", "complex"};

}  // namespace

std::string wordstats_csv(const std::vector<WordStat>& stats) {
  CsvWriter csv(kWordStatHeader);
  for (const auto& s : stats) csv.row(word_stat_fields(s));
  return csv.str();
}

std::string wordpref_csv(const PreferredWordSet& set) {
  std::vector<std::string> header = {"rank"};
  header.insert(header.end(), kWordStatHeader.begin(), kWordStatHeader.end());
  CsvWriter csv(header);
  std::size_t rank = 0;
  for (const auto& s : set.entries) {
    auto fields = word_stat_fields(s);
    fields.insert(fields.begin(), std::to_string(++rank));
    csv.row(fields);
  }
  return csv.str();
}

std::string pattern_counts_csv(const std::vector<PatternCounts>& counts) {
  std::vector<std::string> header = {"id"};
  for (PatternFeature f : kAllPatternFeatures) header.emplace_back(feature_name(f));
  CsvWriter csv(header);
  for (const auto& c : counts) {
    std::vector<std::string> row = {c.document_id};
    for (PatternFeature f : kAllPatternFeatures) row.push_back(std::to_string(c.get(f)));
    csv.row(row);
  }
  return csv.str();
}

std::string patterns_csv(const std::vector<PatternGroup>& groups) {
  CsvWriter csv({"group", "feature", "n_docs", "fp_percent", "fi"});
  for (const auto& g : groups)
    for (PatternFeature f : kAllPatternFeatures) {
      const auto stats = fp_fi(g.counts, f);
      csv.row({g.name, std::string(feature_name(f)), std::to_string(g.counts.size()), format_real(100.0 * stats.fp),
               format_real(stats.fi)});
    }
  return csv.str();
}

std::string penetration_csv(const PenetrationReport& report) {
  const bool ternary = report.scheme == Scheme::Ternary;
  std::vector<std::string> header = {"year", "venue", "kind", "n_docs", "n_predicted_llm", "rate"};
  if (ternary) header.insert(header.end(), {"refined_rate", "synthesized_rate"});
  CsvWriter csv(header);
  for (const auto& r : report.rows) {
    std::vector<std::string> row = {std::to_string(r.year),       r.venue,
                                    std::string(to_string(r.kind)), std::to_string(r.n_docs),
                                    std::to_string(r.n_predicted_llm), format_real(r.rate)};
    if (ternary) {
      row.push_back(format_real(r.refined_rate));
      row.push_back(format_real(r.synthesized_rate));
    }
    csv.row(row);
  }
  return csv.str();
}

std::string trend_csv(const TrendReport& report) {
  std::vector<std::string> header;
  for (GroupKey k : report.group_keys) header.emplace_back(to_string(k));
  header.push_back("n_docs");
  for (const auto& c : report.columns) header.push_back(c);
  header.push_back("penetration");
  CsvWriter csv(header);
  for (const auto& row : report.rows) {
    std::vector<std::string> fields = row.key;
    fields.push_back(std::to_string(row.n_docs));
    for (const auto& m : row.means) fields.push_back(format_real(m));
    fields.push_back(format_real(row.penetration));
    csv.row(fields);
  }
  return csv.str();
}

}  // namespace llmetrica
