#include "llmetrica/split.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "json.hpp"
#include "llmetrica/errors.hpp"

namespace llmetrica {

std::size_t DeterministicRng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("DeterministicRng::index: n must be positive");
  const std::uint64_t range = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % range);
}

SplitManifest split_paired(const Corpus& corpus, Kind kind, SplitRatio ratio, std::uint64_t seed,
                           PairingStrategy strategy) {
  if (ratio.train + ratio.test == 0) throw InputError("split ratio must be positive");
  std::set<std::string> eligible;
  for (const auto& d : corpus.documents())
    if (d.kind == kind && d.provenance.source == Provenance::Source::Human) eligible.insert(d.paper_id);
  if (eligible.empty())
    throw InputError("no papers with a human " + std::string(to_string(kind)) + " document to split");

  std::vector<std::string> order(eligible.begin(), eligible.end());
  DeterministicRng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);

  const std::size_t n = order.size();
  const std::size_t train_count = n * ratio.train / (ratio.train + ratio.test);
  SplitManifest m;
  m.kind = kind;
  m.seed = seed;
  m.strategy = std::move(strategy);
  m.train_paper_ids.insert(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_count));
  m.test_paper_ids.insert(order.begin() + static_cast<std::ptrdiff_t>(train_count), order.end());
  return m;
}

std::vector<TrainingItem> build_training_pairs(const Corpus& corpus, const SplitManifest& manifest,
                                               const PairingStrategy& strategy) {
  // paper -> (human doc, LLM counterparts sorted by (model, id))
  struct Paper {
    const Document* human = nullptr;
    std::vector<const Document*> llm;
  };
  std::map<std::string, Paper> papers;
  for (const auto& d : corpus.documents()) {
    if (d.kind != manifest.kind || !manifest.train_paper_ids.count(d.paper_id)) continue;
    auto& p = papers[d.paper_id];
    if (d.provenance.source == Provenance::Source::Human) {
      p.human = &d;
    } else if (d.provenance.is_llm()) {
      p.llm.push_back(&d);
    }
  }
  for (const auto& id : manifest.train_paper_ids)
    if (!papers.count(id) || !papers[id].human)
      throw InputError("manifest does not match corpus: paper '" + id + "' has no human " +
                       std::string(to_string(manifest.kind)));

  std::vector<std::string> missing;
  for (auto& [id, p] : papers) {
    std::sort(p.llm.begin(), p.llm.end(), [](const Document* a, const Document* b) {
      return std::tie(a->provenance.model, a->id) < std::tie(b->provenance.model, b->id);
    });
    const bool ok = strategy.mode == PairingStrategy::Mode::MixedLlm
                        ? !p.llm.empty()
                        : std::any_of(p.llm.begin(), p.llm.end(), [&](const Document* d) {
                            return d->provenance.model == strategy.model;
                          });
    if (!ok) missing.push_back(id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& id : missing) list += (list.empty() ? "" : ", ") + id;
    if (strategy.mode == PairingStrategy::Mode::SingleLlm)
      throw InputError("model '" + strategy.model + "' has no counterpart for papers: " + list);
    throw InputError("no LLM counterpart for papers: " + list);
  }

  DeterministicRng rng(manifest.seed);
  std::vector<TrainingItem> out;
  out.reserve(papers.size() * 2);
  for (const auto& [id, p] : papers) {
    out.push_back({*p.human, PairLabel::Human});
    const Document* chosen = nullptr;
    if (strategy.mode == PairingStrategy::Mode::SingleLlm) {
      for (const auto* d : p.llm)
        if (d->provenance.model == strategy.model) {
          chosen = d;
          break;
        }
    } else {
      std::vector<std::string> models;
      for (const auto* d : p.llm)
        if (models.empty() || models.back() != d->provenance.model) models.push_back(d->provenance.model);
      const auto& model = models[rng.index(models.size())];
      for (const auto* d : p.llm)
        if (d->provenance.model == model) {
          chosen = d;
          break;
        }
    }
    out.push_back({*chosen, PairLabel::Llm});
  }
  return out;
}

std::string manifest_to_json(const SplitManifest& m) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(m.kind);
  j["train"] = std::vector<std::string>(m.train_paper_ids.begin(), m.train_paper_ids.end());
  j["test"] = std::vector<std::string>(m.test_paper_ids.begin(), m.test_paper_ids.end());
  j["strategy"] = m.strategy.mode == PairingStrategy::Mode::SingleLlm ? "single_llm" : "mixed_llm";
  if (m.strategy.mode == PairingStrategy::Mode::SingleLlm) j["model"] = m.strategy.model;
  j["seed"] = m.seed;
  return j.dump(2) + "\n";
}

SplitManifest manifest_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SplitManifest m;
    const auto kind = parse_kind(j.value("kind", std::string("abstract")));
    if (!kind) throw InputError("manifest: unknown kind");
    m.kind = *kind;
    for (const auto& id : j.at("train")) m.train_paper_ids.insert(id.get<std::string>());
    for (const auto& id : j.at("test")) m.test_paper_ids.insert(id.get<std::string>());
    const auto strategy = j.at("strategy").get<std::string>();
    if (strategy == "single_llm") {
      m.strategy = PairingStrategy::single(j.at("model").get<std::string>());
    } else if (strategy == "mixed_llm") {
      m.strategy = PairingStrategy::mixed();
    } else {
      throw InputError("manifest: unknown strategy '" + strategy + "'");
    }
    m.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& id : m.train_paper_ids)
      if (m.test_paper_ids.count(id)) throw InputError("manifest: paper '" + id + "' on both sides");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed split manifest: ") + e.what());
  }
}

}  // namespace llmetrica
