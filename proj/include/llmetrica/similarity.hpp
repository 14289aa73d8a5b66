#pragma once

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "llmetrica/http_json.hpp"

namespace llmetrica {

using Embedding = std::vector<double>;

/// Turns texts into fixed-dimension vectors.
class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;
  virtual std::vector<Embedding> embed(const std::vector<std::string>& texts) const = 0;
  virtual std::string name() const = 0;
  virtual bool concurrent_safe() const = 0;
  /// Largest number of texts the similarity engine should pass per embed call.
  virtual std::size_t max_batch() const { return 64; }
};

/// Hashed bag of lowercased alphabetic tokens (FNV-1a, 4096 buckets), L2-normalized.
class LexicalProvider final : public SimilarityProvider {
 public:
  static constexpr std::size_t kDimension = 4096;

  std::vector<Embedding> embed(const std::vector<std::string>& texts) const override;
  std::string name() const override { return "lexical-hash-4096"; }
  bool concurrent_safe() const override { return true; }

  static std::size_t bucket(const std::string& lower_token);
};

/// Client for the sidecar's POST /embed. Requests carry at most 64 texts;
/// vectors are cached by text for the lifetime of the provider.
class RemoteProvider final : public SimilarityProvider {
 public:
  explicit RemoteProvider(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {}

  std::vector<Embedding> embed(const std::vector<std::string>& texts) const override;
  std::string name() const override { return "remote:" + endpoint_.url; }
  bool concurrent_safe() const override { return true; }

  std::size_t requests_sent() const { return requests_.load(); }
  std::optional<std::size_t> dimension() const;

  static constexpr std::size_t kMaxBatch = 64;

 private:
  HttpEndpoint endpoint_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, Embedding> cache_;
  mutable std::optional<std::size_t> dim_;
  mutable std::atomic<std::size_t> requests_{0};
};

/// Cosine similarity; 0 when either vector is zero.
double cosine(std::span<const double> a, std::span<const double> b);

/// sim(a, b) in [0, 1] as consumed by the semantic metrics.
class Similarity {
 public:
  virtual ~Similarity() = default;
  virtual double operator()(const std::string& a, const std::string& b) const = 0;
  /// Hint that these texts will be compared soon.
  virtual void prefetch(const std::vector<std::string>& texts) const { (void)texts; }
};

/// clamp(cosine(embed(a), embed(b)), 0, 1), with identical texts scoring
/// exactly 1. Embeddings are cached; prefetch embeds in provider-sized
/// batches, up to four at once when the provider is concurrent-safe.
class EmbeddingSimilarity final : public Similarity {
 public:
  explicit EmbeddingSimilarity(const SimilarityProvider& provider) : provider_(provider) {}

  double operator()(const std::string& a, const std::string& b) const override;
  void prefetch(const std::vector<std::string>& texts) const override;

 private:
  Embedding lookup(const std::string& text) const;

  const SimilarityProvider& provider_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, Embedding> cache_;
};

}  // namespace llmetrica
