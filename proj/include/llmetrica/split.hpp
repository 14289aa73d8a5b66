#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "llmetrica/corpus.hpp"

namespace llmetrica {

struct PairingStrategy {
  enum class Mode { SingleLlm, MixedLlm };
  Mode mode = Mode::MixedLlm;
  std::string model;  // SingleLlm only

  static PairingStrategy single(std::string model) { return {Mode::SingleLlm, std::move(model)}; }
  static PairingStrategy mixed() { return {Mode::MixedLlm, {}}; }
  bool operator==(const PairingStrategy&) const = default;
};

struct SplitRatio {
  unsigned train = 7;
  unsigned test = 3;
};

struct SplitManifest {
  Kind kind = Kind::Abstract;
  std::set<std::string> train_paper_ids;
  std::set<std::string> test_paper_ids;
  PairingStrategy strategy;
  std::uint64_t seed = 0;

  bool operator==(const SplitManifest&) const = default;
};

/// Splits papers that have a human document of `kind`. Paper ids are sorted,
/// shuffled with a seeded Fisher-Yates, and the first floor(N * train / (train + test))
/// go to train. LLM counterparts follow their paper.
SplitManifest split_paired(const Corpus& corpus, Kind kind, SplitRatio ratio, std::uint64_t seed,
                           PairingStrategy strategy = PairingStrategy::mixed());

enum class PairLabel { Human, Llm };

struct TrainingItem {
  Document document;
  PairLabel label;
};

/// One (human, Human) and one (llm, Llm) item per train-side paper, papers in
/// sorted order. SingleLlm takes that model's counterpart; MixedLlm draws a
/// model uniformly per paper from the manifest seed.
std::vector<TrainingItem> build_training_pairs(const Corpus& corpus, const SplitManifest& manifest,
                                               const PairingStrategy& strategy);

std::string manifest_to_json(const SplitManifest& manifest);
SplitManifest manifest_from_json(const std::string& text);

/// Seeded index generator. mt19937_64's sequence is fixed by the standard;
/// the mapping to [0, n) is done here (rejection sampling) because
/// std::uniform_int_distribution differs between standard libraries.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace llmetrica
