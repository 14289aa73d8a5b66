#include "llmetrica/trend.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "llmetrica/errors.hpp"

namespace llmetrica {

std::string_view to_string(GroupKey key) {
  switch (key) {
    case GroupKey::Year: return "year";
    case GroupKey::Venue: return "venue";
    case GroupKey::Kind: return "kind";
    case GroupKey::Provenance: return "provenance";
  }
  return "?";
}

std::optional<GroupKey> parse_group_key(std::string_view s) {
  for (GroupKey k : {GroupKey::Year, GroupKey::Venue, GroupKey::Kind, GroupKey::Provenance})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

// Year sorts numerically, everything else lexically.
struct KeyPart {
  std::optional<int> number;
  std::string text;
  auto operator<=>(const KeyPart&) const = default;
};

KeyPart key_part(const TrendRecord& r, GroupKey key) {
  switch (key) {
    case GroupKey::Year: return {r.year, std::to_string(r.year)};
    case GroupKey::Venue: return {std::nullopt, r.venue};
    case GroupKey::Kind: return {std::nullopt, r.kind};
    case GroupKey::Provenance: return {std::nullopt, r.provenance};
  }
  return {};
}

struct Accumulator {
  std::size_t n = 0;
  std::vector<double> sums;
  std::vector<std::size_t> counts;
  std::size_t predicted = 0;
  std::size_t predicted_llm = 0;
};

}  // namespace

TrendReport trend(const std::vector<TrendRecord>& records, const std::vector<std::string>& columns,
                  const std::vector<GroupKey>& group_keys) {
  if (records.empty()) throw InputError("trend: no rows");
  if (group_keys.empty()) throw InputError("trend: no group keys");
  if (std::set<GroupKey>(group_keys.begin(), group_keys.end()).size() != group_keys.size())
    throw InputError("trend: duplicate group key");

  std::map<std::vector<KeyPart>, Accumulator> groups;
  for (const auto& r : records) {
    if (r.values.size() != columns.size())
      throw InputError("trend: record has " + std::to_string(r.values.size()) + " values, expected " +
                       std::to_string(columns.size()));
    std::vector<KeyPart> key;
    for (GroupKey k : group_keys) key.push_back(key_part(r, k));
    auto& acc = groups[key];
    if (acc.sums.empty()) {
      acc.sums.assign(columns.size(), 0.0);
      acc.counts.assign(columns.size(), 0);
    }
    ++acc.n;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (r.values[c]) {
        acc.sums[c] += *r.values[c];
        ++acc.counts[c];
      }
    if (r.predicted_llm) {
      ++acc.predicted;
      if (*r.predicted_llm) ++acc.predicted_llm;
    }
  }

  TrendReport report{group_keys, columns, {}};
  for (const auto& [key, acc] : groups) {
    TrendRow row;
    for (const auto& part : key) row.key.push_back(part.text);
    row.n_docs = acc.n;
    row.counts = acc.counts;
    for (std::size_t c = 0; c < columns.size(); ++c)
      row.means.push_back(acc.counts[c] ? std::optional<double>(acc.sums[c] / static_cast<double>(acc.counts[c]))
                                        : std::nullopt);
    row.n_predicted = acc.predicted;
    if (acc.predicted)
      row.penetration = static_cast<double>(acc.predicted_llm) / static_cast<double>(acc.predicted);
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::ordered_json trend_plot_json(const TrendReport& report) {
  const auto year_it = std::find(report.group_keys.begin(), report.group_keys.end(), GroupKey::Year);
  if (year_it == report.group_keys.end()) throw InputError("plot data needs 'year' among the group keys");
  const auto year_pos = static_cast<std::size_t>(year_it - report.group_keys.begin());

  auto series_key = [&](const TrendRow& row, const std::string& column) {
    nlohmann::ordered_json key = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < report.group_keys.size(); ++i)
      if (i != year_pos) key[std::string(to_string(report.group_keys[i]))] = row.key[i];
    key["column"] = column;
    return key;
  };

  // Rows are already sorted with year inside the other keys' order only when
  // year comes last, so collect per series first.
  std::map<std::string, std::pair<nlohmann::ordered_json, nlohmann::ordered_json>> series;
  std::vector<std::string> order;
  auto add_point = [&](const TrendRow& row, const std::string& column, double y, std::size_t n) {
    auto key = series_key(row, column);
    const auto id = key.dump();
    auto [it, inserted] = series.try_emplace(id, key, nlohmann::ordered_json::array());
    if (inserted) order.push_back(id);
    nlohmann::ordered_json point;
    point["x"] = std::stoi(row.key[year_pos]);
    point["y"] = y;
    point["n"] = n;
    it->second.second.push_back(point);
  };
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < report.columns.size(); ++c)
      if (row.means[c]) add_point(row, report.columns[c], *row.means[c], row.counts[c]);
    if (row.penetration) add_point(row, "penetration", *row.penetration, row.n_predicted);
  }

  std::sort(order.begin(), order.end());
  nlohmann::ordered_json out;
  out["series"] = nlohmann::ordered_json::array();
  for (const auto& id : order) {
    auto& [key, points] = series.at(id);
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a["x"].template get<int>() < b["x"].template get<int>(); });
    nlohmann::ordered_json s;
    s["key"] = key;
    s["points"] = points;
    out["series"].push_back(s);
  }
  return out;
}

}  // namespace llmetrica
