#include "llmetrica/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

#include "llmetrica/errors.hpp"
#include "llmetrica/text.hpp"

namespace llmetrica {

std::size_t LexicalProvider::bucket(const std::string& lower_token) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : lower_token) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h % kDimension);
}

std::vector<Embedding> LexicalProvider::embed(const std::vector<std::string>& texts) const {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    Embedding v(kDimension, 0.0);
    for (const auto& t : tokenize(text))
      if (t.is_alphabetic) v[bucket(t.lower)] += 1.0;
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 0.0) {
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::size_t> RemoteProvider::dimension() const {
  std::lock_guard lock(mutex_);
  return dim_;
}

std::vector<Embedding> RemoteProvider::embed(const std::vector<std::string>& texts) const {
  std::vector<std::string> missing;
  {
    std::lock_guard lock(mutex_);
    std::set<std::string> seen;
    for (const auto& t : texts)
      if (!cache_.count(t) && seen.insert(t).second) missing.push_back(t);
  }
  for (std::size_t begin = 0; begin < missing.size(); begin += kMaxBatch) {
    const std::size_t end = std::min(missing.size(), begin + kMaxBatch);
    const std::vector<std::string> batch(missing.begin() + static_cast<std::ptrdiff_t>(begin),
                                         missing.begin() + static_cast<std::ptrdiff_t>(end));
    ++requests_;
    const auto response = post_json(endpoint_, "/embed", {{"sentences", batch}});
    const auto dim_it = response.find("dim");
    const auto vec_it = response.find("vectors");
    if (dim_it == response.end() || !dim_it->is_number_unsigned() || vec_it == response.end() ||
        !vec_it->is_array())
      throw ProtocolError("/embed: response must contain integer 'dim' and array 'vectors'");
    const auto dim = dim_it->get<std::size_t>();
    if (vec_it->size() != batch.size())
      throw ProtocolError("/embed: expected " + std::to_string(batch.size()) + " vectors, got " +
                          std::to_string(vec_it->size()));
    std::vector<Embedding> vectors;
    for (const auto& v : *vec_it) {
      if (!v.is_array() || v.size() != dim) throw ProtocolError("/embed: vector length differs from dim");
      Embedding e;
      e.reserve(dim);
      for (const auto& x : v) {
        if (!x.is_number()) throw ProtocolError("/embed: non-numeric vector component");
        e.push_back(x.get<double>());
      }
      vectors.push_back(std::move(e));
    }
    std::lock_guard lock(mutex_);
    if (dim_ && *dim_ != dim)
      throw ProtocolError("/embed: dimension changed from " + std::to_string(*dim_) + " to " + std::to_string(dim));
    dim_ = dim;
    for (std::size_t i = 0; i < batch.size(); ++i) cache_.emplace(batch[i], std::move(vectors[i]));
  }
  std::vector<Embedding> out;
  out.reserve(texts.size());
  std::lock_guard lock(mutex_);
  for (const auto& t : texts) out.push_back(cache_.at(t));
  return out;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ProtocolError("cosine: embedding dimensions differ");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

Embedding EmbeddingSimilarity::lookup(const std::string& text) const {
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(text); it != cache_.end()) return it->second;
  }
  auto v = provider_.embed({text});
  if (v.size() != 1) throw ProtocolError(provider_.name() + ": embed returned wrong number of vectors");
  std::lock_guard lock(mutex_);
  return cache_.emplace(text, std::move(v.front())).first->second;
}

double EmbeddingSimilarity::operator()(const std::string& a, const std::string& b) const {
  if (a == b) return 1.0;
  const auto ea = lookup(a);
  const auto eb = lookup(b);
  return std::clamp(cosine(ea, eb), 0.0, 1.0);
}

void EmbeddingSimilarity::prefetch(const std::vector<std::string>& texts) const {
  std::vector<std::string> missing;
  {
    std::lock_guard lock(mutex_);
    std::set<std::string> seen;
    for (const auto& t : texts)
      if (!cache_.count(t) && seen.insert(t).second) missing.push_back(t);
  }
  const std::size_t batch = std::max<std::size_t>(1, provider_.max_batch());
  std::vector<std::vector<std::string>> chunks;
  for (std::size_t i = 0; i < missing.size(); i += batch)
    chunks.emplace_back(missing.begin() + static_cast<std::ptrdiff_t>(i),
                        missing.begin() + static_cast<std::ptrdiff_t>(std::min(missing.size(), i + batch)));

  auto store = [&](const std::vector<std::string>& chunk, std::vector<Embedding>&& vectors) {
    if (vectors.size() != chunk.size()) throw ProtocolError(provider_.name() + ": embed returned wrong number of vectors");
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < chunk.size(); ++i) cache_.emplace(chunk[i], std::move(vectors[i]));
  };

  constexpr std::size_t kMaxInFlight = 4;
  if (!provider_.concurrent_safe() || chunks.size() < 2) {
    for (const auto& chunk : chunks) store(chunk, provider_.embed(chunk));
    return;
  }
  for (std::size_t i = 0; i < chunks.size(); i += kMaxInFlight) {
    std::vector<std::future<std::vector<Embedding>>> inflight;
    const std::size_t end = std::min(chunks.size(), i + kMaxInFlight);
    for (std::size_t k = i; k < end; ++k)
      inflight.push_back(std::async(std::launch::async, [&, k] { return provider_.embed(chunks[k]); }));
    for (std::size_t k = i; k < end; ++k) store(chunks[k], inflight[k - i].get());
  }
}

}  // namespace llmetrica
