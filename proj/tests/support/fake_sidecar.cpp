#include "fake_sidecar.hpp"

#include <chrono>
#include <cmath>

#include "json.hpp"
#include "llmetrica/annotate.hpp"

namespace fixtures {

namespace {

bool contains(const std::string& text, const char* marker) { return text.find(marker) != std::string::npos; }

std::string annotate_to_conllu(const std::string& text) {
  const auto doc = llmetrica::annotate_text("x", text);
  std::string out;
  for (const auto& s : doc.sentences) {
    out += "# text = " + std::string(text.substr(s.char_span.first, s.char_span.second - s.char_span.first)) + "\n";
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const auto& t = s.tokens[i];
      const std::string upos = t.is_alphabetic ? (t.lower.size() > 6 ? "NOUN" : "ADJ") : "PUNCT";
      out += std::to_string(i + 1) + "\t" + t.form + "\t_\t" + upos + "\t_\t_\t" + (i == 0 ? "0" : "1") + "\t" +
             (i == 0 ? "root" : t.is_alphabetic ? "dep" : "punct") + "\t_\t_\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::vector<double> FakeSidecar::embedding(const std::string& text, int dim) {
  std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h = (h ^ c) * 1099511628211ULL;
    v[h % v.size()] += 1.0;
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) v[0] = 1.0, norm = 1.0;
  for (double& x : v) x /= norm;
  return v;
}

FakeSidecar::FakeSidecar() {
  auto guard = [this](const httplib::Request& req, httplib::Response& res) {
    if (always_fail.load() || fail_next.load() > 0) {
      if (!always_fail.load()) --fail_next;
      res.status = 503;
      res.set_content("busy", "text/plain");
      return false;
    }
    (void)req;
    return true;
  };

  server_.Post("/annotate", [this, guard](const httplib::Request& req, httplib::Response& res) {
    if (!guard(req, res)) return;
    const auto body = nlohmann::json::parse(req.body);
    record("/annotate", body.at("texts").size());
    nlohmann::json out;
    out["conllu"] = nlohmann::json::array();
    for (const auto& t : body.at("texts")) out["conllu"].push_back(annotate_to_conllu(t.get<std::string>()));
    res.set_content(out.dump(), "application/json");
  });

  server_.Post("/embed", [this, guard](const httplib::Request& req, httplib::Response& res) {
    if (!guard(req, res)) return;
    const auto body = nlohmann::json::parse(req.body);
    const bool first = requests("/embed") == 0;
    record("/embed", body.at("sentences").size());
    const int dim = flip_dim_after_first.load() && !first ? embed_dim.load() + 1 : embed_dim.load();
    nlohmann::json out;
    out["dim"] = dim;
    out["model"] = "fake-hash";
    out["vectors"] = nlohmann::json::array();
    for (const auto& s : body.at("sentences")) out["vectors"].push_back(embedding(s.get<std::string>(), dim));
    res.set_content(out.dump(), "application/json");
  });

  server_.Post("/classify", [this, guard](const httplib::Request& req, httplib::Response& res) {
    if (!guard(req, res)) return;
    const int now = ++in_flight_;
    for (int seen = max_in_flight_.load(); now > seen && !max_in_flight_.compare_exchange_weak(seen, now);) {
    }
    if (classify_delay_ms.load() > 0) std::this_thread::sleep_for(std::chrono::milliseconds(classify_delay_ms.load()));
    const auto body = nlohmann::json::parse(req.body);
    const bool ternary = body.value("scheme", "binary") == "ternary";
    record("/classify", body.at("texts").size());
    const auto mode = classify_mode.load();
    nlohmann::json preds = nlohmann::json::array();
    for (const auto& t : body.at("texts")) {
      const auto text = t.get<std::string>();
      nlohmann::json probs;
      std::string label;
      if (!ternary) {
        const double llm = contains(text, "delve") || contains(text, "comprehensive") ? 0.9 : 0.2;
        probs = {{"human", 1.0 - llm}, {"llm", llm}};
        label = llm > 0.5 ? "llm" : "human";
      } else if (contains(text, "delve")) {
        probs = {{"human", 0.1}, {"llm_refined", 0.1}, {"llm_synthesized", 0.8}};
        label = "llm_synthesized";
      } else if (contains(text, "comprehensive")) {
        probs = {{"human", 0.2}, {"llm_refined", 0.7}, {"llm_synthesized", 0.1}};
        label = "llm_refined";
      } else {
        probs = {{"human", 0.8}, {"llm_refined", 0.1}, {"llm_synthesized", 0.1}};
        label = "human";
      }
      if (mode == ClassifyMode::BadSum) probs["human"] = probs["human"].get<double>() - 0.2;
      if (mode == ClassifyMode::NotArgmax) label = ternary ? "llm_refined" : (label == "llm" ? "human" : "llm");
      nlohmann::json p = {{"probs", probs}};
      if (mode != ClassifyMode::MissingLabel) p["label"] = label;
      preds.push_back(p);
    }
    if (mode == ClassifyMode::WrongCount && !preds.empty()) preds.erase(preds.size() - 1);
    --in_flight_;
    res.set_content(nlohmann::json{{"predictions", preds}}.dump(), "application/json");
  });

  server_.new_task_queue = [] { return new httplib::ThreadPool(8); };
  port_ = server_.bind_to_any_port("127.0.0.1");
  thread_ = std::thread([this] { server_.listen_after_bind(); });
  server_.wait_until_ready();
}

FakeSidecar::~FakeSidecar() {
  server_.stop();
  if (thread_.joinable()) thread_.join();
}

void FakeSidecar::record(const std::string& path, std::size_t batch) {
  std::lock_guard lock(mutex_);
  batches_[path].push_back(batch);
}

int FakeSidecar::requests(const std::string& path) const {
  std::lock_guard lock(mutex_);
  const auto it = batches_.find(path);
  return it == batches_.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<std::size_t> FakeSidecar::batch_sizes(const std::string& path) const {
  std::lock_guard lock(mutex_);
  const auto it = batches_.find(path);
  return it == batches_.end() ? std::vector<std::size_t>{} : it->second;
}

}  // namespace fixtures
