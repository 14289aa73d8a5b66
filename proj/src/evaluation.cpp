#include "llmetrica/evaluation.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "llmetrica/errors.hpp"

namespace llmetrica {

const ClassScore& EvalReport::score(Label label) const {
  for (const auto& c : classes)
    if (c.label == label) return c;
  throw DomainError("label '" + std::string(to_string(label)) + "' not in report");
}

namespace {

std::size_t label_index(Label label, Scheme scheme) {
  const auto& labels = scheme_labels(scheme);
  return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

}  // namespace

EvalReport evaluate(const std::vector<Prediction>& preds, const std::map<std::string, Label>& gold) {
  if (preds.empty()) throw InputError("evaluate: no predictions");
  const Scheme scheme = preds.front().scheme;
  const auto& labels = scheme_labels(scheme);
  const std::size_t k = labels.size();

  EvalReport report;
  report.scheme = scheme;
  report.n = preds.size();
  report.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (const auto& p : preds) {
    if (p.scheme != scheme) throw InputError("evaluate: mixed schemes (document '" + p.document_id + "')");
    const auto it = gold.find(p.document_id);
    if (it == gold.end()) throw InputError("evaluate: no gold label for '" + p.document_id + "'");
    if (!in_scheme(it->second, scheme))
      throw InputError("evaluate: gold label '" + std::string(to_string(it->second)) + "' for '" + p.document_id +
                       "' is outside the " + std::string(to_string(scheme)) + " scheme");
    if (!in_scheme(p.label, scheme))
      throw InputError("evaluate: predicted label outside the scheme for '" + p.document_id + "'");
    ++report.confusion[label_index(it->second, scheme)][label_index(p.label, scheme)];
  }

  double weighted = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t tp = report.confusion[c][c], fp = 0, fn = 0;
    for (std::size_t o = 0; o < k; ++o) {
      if (o == c) continue;
      fp += report.confusion[o][c];
      fn += report.confusion[c][o];
    }
    ClassScore s;
    s.label = labels[c];
    s.support = tp + fn;
    s.zero_support = s.support == 0;
    s.precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    s.recall = s.support ? static_cast<double>(tp) / static_cast<double>(s.support) : 0.0;
    // Same value as 2PR/(P+R), but exact in rationals.
    s.f1 = tp ? 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn) : 0.0;
    weighted += static_cast<double>(s.support) * s.f1;
    report.classes.push_back(s);
  }
  report.weighted_f1 = weighted / static_cast<double>(report.n);
  return report;
}

std::map<std::string, Label> gold_labels(const Corpus& corpus, Scheme scheme) {
  std::map<std::string, Label> gold;
  for (const auto& d : corpus.documents())
    if (const auto g = gold_label(d.provenance, scheme)) gold[d.id] = *g;
  return gold;
}

nlohmann::ordered_json eval_report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["scheme"] = to_string(report.scheme);
  j["n"] = report.n;
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (const auto& c : report.classes) {
    nlohmann::ordered_json cj;
    cj["precision"] = c.precision;
    cj["recall"] = c.recall;
    cj["f1"] = c.f1;
    cj["support"] = c.support;
    cj["zero_support"] = c.zero_support;
    classes[std::string(to_string(c.label))] = cj;
  }
  j["classes"] = classes;
  j["weighted_f1"] = report.weighted_f1;
  j["confusion"] = report.confusion;
  return j;
}

nlohmann::ordered_json evaluation_table(const std::vector<Prediction>& preds, const Corpus& corpus) {
  if (preds.empty()) throw InputError("evaluate: no predictions");
  const Scheme scheme = preds.front().scheme;
  const auto gold = gold_labels(corpus, scheme);

  std::map<Kind, std::vector<Prediction>> by_kind;
  for (const auto& p : preds) {
    const Document* d = corpus.find(p.document_id);
    if (!d) throw InputError("evaluate: prediction for unknown document '" + p.document_id + "'");
    if (d->provenance.source == Provenance::Source::Unknown) continue;
    by_kind[d->kind].push_back(p);
  }
  if (by_kind.empty()) throw InputError("evaluate: no predictions for documents with known provenance");

  nlohmann::ordered_json j;
  j["scheme"] = to_string(scheme);
  nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
  double sum = 0.0;
  for (const auto& [kind, group] : by_kind) {
    const auto report = evaluate(group, gold);
    sum += report.weighted_f1;
    kinds[std::string(to_string(kind))] = eval_report_to_json(report);
  }
  j["kinds"] = kinds;
  j["avg"] = sum / static_cast<double>(by_kind.size());
  return j;
}

PenetrationReport penetration(const std::vector<Prediction>& preds, const std::vector<const Document*>& docs) {
  if (docs.empty()) throw InputError("penetration: empty group set");
  std::unordered_map<std::string, const Prediction*> by_id;
  for (const auto& p : preds) by_id[p.document_id] = &p;

  PenetrationReport report;
  report.scheme = preds.empty() ? Scheme::Binary : preds.front().scheme;
  using Key = std::tuple<int, std::string, Kind>;
  std::map<Key, PenetrationRow> groups;
  for (const Document* d : docs) {
    const auto it = by_id.find(d->id);
    if (it == by_id.end()) throw InputError("penetration: no prediction for '" + d->id + "'");
    const Prediction& p = *it->second;
    if (p.scheme != report.scheme) throw InputError("penetration: mixed schemes (document '" + d->id + "')");
    auto& row = groups[{d->year, d->venue, d->kind}];
    row.year = d->year;
    row.venue = d->venue;
    row.kind = d->kind;
    ++row.n_docs;
    if (is_llm_label(p.label)) ++row.n_predicted_llm;
    if (report.scheme == Scheme::Ternary) {
      row.n_refined = row.n_refined.value_or(0) + (p.label == Label::LlmRefined ? 1 : 0);
      row.n_synthesized = row.n_synthesized.value_or(0) + (p.label == Label::LlmSynthesized ? 1 : 0);
    }
  }
  for (auto& [key, row] : groups) {
    const auto n = static_cast<double>(row.n_docs);
    row.rate = static_cast<double>(row.n_predicted_llm) / n;
    if (row.n_refined) {
      row.refined_rate = static_cast<double>(*row.n_refined) / n;
      row.synthesized_rate = static_cast<double>(*row.n_synthesized) / n;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace llmetrica
