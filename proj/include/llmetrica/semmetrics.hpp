#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llmetrica/corpus.hpp"
#include "llmetrica/similarity.hpp"

namespace llmetrica {

inline constexpr double kDefaultSimilarityThreshold = 0.5;

/// Mean similarity between the meta-review and each review.
double mrsim(const PaperBundle& bundle, const Similarity& sim);

/// Maximum similarity over unordered review pairs.
double rsim(const PaperBundle& bundle, const Similarity& sim);

/// Sentence texts of a document (trimmed spans of split_sentences).
std::vector<std::string> sentence_texts(const std::string& text);

/// Sentence-frequency times inverse-reference-frequency for one sentence:
///   SF  = O / n,  O = sum over target sentences s~ with sim(s, s~) >= t of sim(s, s~)
///         (the sentence itself contributes exactly 1)
///   IRF = ln((m + 1) / (Q + 1)),  Q = sum over reference reviews of their best
///         sentence similarity to s, counted when >= t;  m = number of references.
double sf_irf_sentences(const std::vector<std::string>& target_sentences, std::size_t index,
                        const std::vector<std::vector<std::string>>& reference_sentences,
                        const Similarity& sim, double t = kDefaultSimilarityThreshold);

/// Reference set for a target: every review for a meta-review, the other
/// reviews for a review. Throws InputError when the target is not in the bundle.
std::vector<const Document*> reference_reviews(const Document& target, const PaperBundle& bundle);

/// SF-IRF of the target's `sentence_index`-th sentence. Throws DomainError
/// when the reference set is empty (single-review papers).
double sf_irf(std::size_t sentence_index, const Document& target, const PaperBundle& bundle,
              const Similarity& sim, double t = kDefaultSimilarityThreshold);

/// Mean SF-IRF over all sentences of the target.
double specificity(const Document& target, const PaperBundle& bundle, const Similarity& sim,
                   double t = kDefaultSimilarityThreshold);

struct SemanticReport {
  std::string paper_id;
  std::optional<double> mrsim;
  std::optional<double> rsim;
  std::optional<double> meta_specificity;
  std::map<std::string, double> review_specificity;  // review id -> mean SF-IRF
  std::vector<std::string> skipped;                  // human-readable reasons for absent values
};

/// Computes every semantic metric the bundle supports.
SemanticReport semantic_report(const PaperBundle& bundle, const Similarity& sim,
                               double t = kDefaultSimilarityThreshold);

}  // namespace llmetrica
