#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "llmetrica/corpus.hpp"
#include "llmetrica/detect.hpp"

namespace llmetrica {

struct ClassScore {
  Label label = Label::Human;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
  bool zero_support = false;
};

struct EvalReport {
  Scheme scheme = Scheme::Binary;
  std::vector<ClassScore> classes;  // scheme label order
  double weighted_f1 = 0.0;
  std::size_t n = 0;
  /// confusion[gold][predicted], indexed by scheme label order.
  std::vector<std::vector<std::size_t>> confusion;

  const ClassScore& score(Label label) const;
};

/// Per-class precision/recall/F1 from the confusion matrix plus the
/// support-weighted F1. Throws InputError on a missing gold label, a label
/// outside the scheme, or mixed schemes.
EvalReport evaluate(const std::vector<Prediction>& preds, const std::map<std::string, Label>& gold);

/// Gold labels for every document with known provenance.
std::map<std::string, Label> gold_labels(const Corpus& corpus, Scheme scheme);

nlohmann::ordered_json eval_report_to_json(const EvalReport& report);

/// Evaluation split by document kind plus the macro average of the per-kind
/// weighted F1 under "avg". Predictions for unknown-provenance documents are ignored.
nlohmann::ordered_json evaluation_table(const std::vector<Prediction>& preds, const Corpus& corpus);

struct PenetrationRow {
  int year = 0;
  std::string venue;
  Kind kind = Kind::Abstract;
  std::size_t n_docs = 0;
  std::size_t n_predicted_llm = 0;
  double rate = 0.0;
  // Ternary only.
  std::optional<std::size_t> n_refined;
  std::optional<std::size_t> n_synthesized;
  std::optional<double> refined_rate;
  std::optional<double> synthesized_rate;
};

struct PenetrationReport {
  Scheme scheme = Scheme::Binary;
  std::vector<PenetrationRow> rows;  // sorted by (year, venue, kind)
};

/// Share of documents predicted LLM per (year, venue, kind). Every document
/// needs a prediction; throws InputError otherwise or when `docs` is empty.
PenetrationReport penetration(const std::vector<Prediction>& preds, const std::vector<const Document*>& docs);

}  // namespace llmetrica
