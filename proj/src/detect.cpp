#include "llmetrica/detect.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "llmetrica/errors.hpp"

namespace llmetrica {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::Human: return "human";
    case Label::LlmRefined: return "llm_refined";
    case Label::LlmSynthesized: return "llm_synthesized";
    case Label::Llm: return "llm";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) {
  for (Label l : {Label::Human, Label::LlmRefined, Label::LlmSynthesized, Label::Llm})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

std::string_view to_string(Scheme scheme) { return scheme == Scheme::Binary ? "binary" : "ternary"; }

std::optional<Scheme> parse_scheme(std::string_view s) {
  if (s == "binary") return Scheme::Binary;
  if (s == "ternary") return Scheme::Ternary;
  return std::nullopt;
}

const std::vector<Label>& scheme_labels(Scheme scheme) {
  static const std::vector<Label> binary = {Label::Human, Label::Llm};
  static const std::vector<Label> ternary = {Label::Human, Label::LlmRefined, Label::LlmSynthesized};
  return scheme == Scheme::Binary ? binary : ternary;
}

bool in_scheme(Label label, Scheme scheme) {
  const auto& labels = scheme_labels(scheme);
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

bool is_llm_label(Label label) { return label != Label::Human; }

std::optional<Label> gold_label(const Provenance& provenance, Scheme scheme) {
  switch (provenance.source) {
    case Provenance::Source::Human: return Label::Human;
    case Provenance::Source::LlmRefined: return scheme == Scheme::Binary ? Label::Llm : Label::LlmRefined;
    case Provenance::Source::LlmSynthesized:
      return scheme == Scheme::Binary ? Label::Llm : Label::LlmSynthesized;
    case Provenance::Source::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

Prediction make_prediction(std::string document_id, Scheme scheme, std::map<Label, double> probs) {
  const auto fail = [&](const std::string& what) {
    throw ProtocolError("prediction for '" + document_id + "': " + what);
  };
  double sum = 0.0;
  for (const auto& [label, p] : probs) {
    if (!in_scheme(label, scheme))
      fail("label '" + std::string(to_string(label)) + "' is not part of the " + std::string(to_string(scheme)) +
           " scheme");
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) fail("probability outside [0, 1]");
    sum += p;
  }
  for (Label l : scheme_labels(scheme))
    if (!probs.count(l)) fail("missing probability for '" + std::string(to_string(l)) + "'");
  if (std::fabs(sum - 1.0) > kProbabilitySumTolerance)
    fail("probabilities sum to " + std::to_string(sum) + ", expected 1");

  Prediction p{std::move(document_id), scheme, std::move(probs), Label::Human};
  double best = -1.0;
  for (Label l : scheme_labels(scheme))  // tie-break order
    if (p.probs.at(l) > best) {
      best = p.probs.at(l);
      p.label = l;
    }
  return p;
}

nlohmann::ordered_json prediction_to_json(const Prediction& p) {
  nlohmann::ordered_json j;
  j["document_id"] = p.document_id;
  j["scheme"] = to_string(p.scheme);
  nlohmann::ordered_json probs;
  for (Label l : scheme_labels(p.scheme)) probs[std::string(to_string(l))] = p.probs.at(l);
  j["probs"] = probs;
  j["label"] = to_string(p.label);
  return j;
}

namespace {

std::map<Label, double> parse_probs(const nlohmann::json& j, const std::string& id) {
  if (!j.is_object()) throw ProtocolError("prediction for '" + id + "': 'probs' must be an object");
  std::map<Label, double> probs;
  for (const auto& [key, value] : j.items()) {
    const auto label = parse_label(key);
    if (!label) throw ProtocolError("prediction for '" + id + "': unknown label '" + key + "'");
    if (!value.is_number()) throw ProtocolError("prediction for '" + id + "': non-numeric probability");
    probs[*label] = value.get<double>();
  }
  return probs;
}

// A reported label must be one of the argmax labels; ties resolve by our order.
void check_reported_label(const Prediction& p, const nlohmann::json& reported) {
  if (!reported.is_string()) throw ProtocolError("prediction for '" + p.document_id + "': missing label");
  const auto label = parse_label(reported.get<std::string>());
  if (!label || !in_scheme(*label, p.scheme))
    throw ProtocolError("prediction for '" + p.document_id + "': label '" + reported.get<std::string>() +
                        "' outside the scheme");
  if (p.probs.at(*label) < p.probs.at(p.label))
    throw ProtocolError("prediction for '" + p.document_id + "': label is not the argmax of probs");
}

}  // namespace

Prediction prediction_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ProtocolError("prediction must be a JSON object");
  const auto id_it = j.find("document_id");
  if (id_it == j.end() || !id_it->is_string()) throw ProtocolError("prediction without document_id");
  const std::string id = id_it->get<std::string>();
  const auto scheme = parse_scheme(j.value("scheme", std::string()));
  if (!scheme) throw ProtocolError("prediction for '" + id + "': unknown scheme");
  const auto probs_it = j.find("probs");
  if (probs_it == j.end()) throw ProtocolError("prediction for '" + id + "': missing probs");
  auto p = make_prediction(id, *scheme, parse_probs(*probs_it, id));
  const auto label_it = j.find("label");
  check_reported_label(p, label_it == j.end() ? nlohmann::json() : *label_it);
  return p;
}

std::string predictions_to_jsonl(const std::vector<Prediction>& preds) {
  std::string out;
  for (const auto& p : preds) out += prediction_to_json(p).dump() + "\n";
  return out;
}

std::vector<Prediction> parse_predictions_jsonl(std::string_view text, const std::string& source) {
  std::vector<Prediction> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(prediction_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, line_no, std::string("malformed JSON: ") + e.what());
    } catch (const ProtocolError& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return out;
}

std::vector<Prediction> load_predictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_predictions_jsonl(buf.str(), path);
}

std::vector<Prediction> classify(const std::vector<const Document*>& docs, const HttpEndpoint& endpoint,
                                 Scheme scheme, const ClassifyOptions& options) {
  const std::size_t batch = std::max<std::size_t>(1, options.batch_size);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i < docs.size(); i += batch) ranges.emplace_back(i, std::min(docs.size(), i + batch));

  auto run = [&](std::pair<std::size_t, std::size_t> range) {
    nlohmann::json body;
    body["texts"] = nlohmann::json::array();
    for (std::size_t i = range.first; i < range.second; ++i) body["texts"].push_back(docs[i]->text);
    body["scheme"] = to_string(scheme);
    if (options.model_id) body["model_id"] = *options.model_id;
    const auto response = post_json(endpoint, "/classify", body);
    const auto it = response.find("predictions");
    const std::size_t expected = range.second - range.first;
    if (it == response.end() || !it->is_array() || it->size() != expected)
      throw ProtocolError("/classify: expected 'predictions' array with " + std::to_string(expected) + " entries");
    std::vector<Prediction> out;
    for (std::size_t k = 0; k < expected; ++k) {
      const auto& item = (*it)[k];
      const auto& id = docs[range.first + k]->id;
      if (!item.is_object() || !item.contains("probs"))
        throw ProtocolError("prediction for '" + id + "': missing probs");
      auto p = make_prediction(id, scheme, parse_probs(item.at("probs"), id));
      check_reported_label(p, item.contains("label") ? item.at("label") : nlohmann::json());
      out.push_back(std::move(p));
    }
    return out;
  };

  std::vector<Prediction> preds;
  preds.reserve(docs.size());
  const std::size_t window = std::max<std::size_t>(1, options.max_in_flight);
  for (std::size_t i = 0; i < ranges.size(); i += window) {
    std::vector<std::future<std::vector<Prediction>>> inflight;
    for (std::size_t k = i; k < std::min(ranges.size(), i + window); ++k)
      inflight.push_back(std::async(std::launch::async, run, ranges[k]));
    for (auto& f : inflight)
      for (auto& p : f.get()) preds.push_back(std::move(p));
  }
  return preds;
}

}  // namespace llmetrica
