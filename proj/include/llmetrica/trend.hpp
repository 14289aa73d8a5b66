#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace llmetrica {

enum class GroupKey { Year, Venue, Kind, Provenance };

std::string_view to_string(GroupKey key);
std::optional<GroupKey> parse_group_key(std::string_view s);

/// One document's row: grouping fields, numeric columns (nullopt = not
/// available) and, optionally, whether a detector called it LLM-written.
struct TrendRecord {
  int year = 0;
  std::string venue;
  std::string kind;
  std::string provenance;
  std::vector<std::optional<double>> values;
  std::optional<bool> predicted_llm;
};

struct TrendRow {
  std::vector<std::string> key;  // one entry per group key
  std::size_t n_docs = 0;
  std::vector<std::optional<double>> means;  // per column; nullopt when no value available
  std::vector<std::size_t> counts;           // available values per column
  std::size_t n_predicted = 0;  // records carrying a prediction
  std::optional<double> penetration;  // set when any record in the group carries a prediction
};

struct TrendReport {
  std::vector<GroupKey> group_keys;
  std::vector<std::string> columns;
  std::vector<TrendRow> rows;  // sorted by key tuple (year numerically)
};

/// Groups records and averages every column. Throws InputError on empty
/// input, duplicate/empty group keys, or a row/column width mismatch.
TrendReport trend(const std::vector<TrendRecord>& records, const std::vector<std::string>& columns,
                  const std::vector<GroupKey>& group_keys);

/// Plot data: one series per (non-year key, column) with points x = year.
/// Requires `year` among the group keys.
nlohmann::ordered_json trend_plot_json(const TrendReport& report);

}  // namespace llmetrica
