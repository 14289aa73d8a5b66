#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "llmetrica/corpus.hpp"
#include "llmetrica/http_json.hpp"

namespace llmetrica {

/// Detector labels. Declaration order is the argmax tie-break order.
enum class Label { Human, LlmRefined, LlmSynthesized, Llm };
enum class Scheme { Binary, Ternary };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view s);
std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view s);

/// {human, llm} or {human, llm_refined, llm_synthesized}, in tie-break order.
const std::vector<Label>& scheme_labels(Scheme scheme);
bool in_scheme(Label label, Scheme scheme);
bool is_llm_label(Label label);

/// Gold label implied by a document's provenance; nullopt for Unknown.
std::optional<Label> gold_label(const Provenance& provenance, Scheme scheme);

struct Prediction {
  std::string document_id;
  Scheme scheme = Scheme::Binary;
  std::map<Label, double> probs;
  Label label = Label::Human;

  bool operator==(const Prediction&) const = default;
};

inline constexpr double kProbabilitySumTolerance = 1e-6;

/// Validates probabilities (every scheme label present, each in [0, 1], sum
/// 1 within tolerance) and sets the argmax label. Throws ProtocolError
/// naming the document otherwise.
Prediction make_prediction(std::string document_id, Scheme scheme, std::map<Label, double> probs);

nlohmann::ordered_json prediction_to_json(const Prediction& p);
Prediction prediction_from_json(const nlohmann::json& j);

std::string predictions_to_jsonl(const std::vector<Prediction>& preds);
std::vector<Prediction> parse_predictions_jsonl(std::string_view text, const std::string& source = "<predictions>");
std::vector<Prediction> load_predictions(const std::string& path);

struct ClassifyOptions {
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 4;
  std::optional<std::string> model_id;
};

/// Calls the sidecar's POST /classify. One prediction per document, in input order.
std::vector<Prediction> classify(const std::vector<const Document*>& docs, const HttpEndpoint& endpoint,
                                 Scheme scheme, const ClassifyOptions& options = {});

}  // namespace llmetrica
