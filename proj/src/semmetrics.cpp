#include "llmetrica/semmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "llmetrica/errors.hpp"
#include "llmetrica/text.hpp"

namespace llmetrica {

double mrsim(const PaperBundle& bundle, const Similarity& sim) {
  if (!bundle.meta_review) throw DomainError("MRSim: paper '" + bundle.paper_id + "' has no meta-review");
  if (bundle.reviews.empty()) throw DomainError("MRSim: paper '" + bundle.paper_id + "' has no reviews");
  double total = 0.0;
  for (const auto& r : bundle.reviews) total += sim(bundle.meta_review->text, r.text);
  return total / static_cast<double>(bundle.reviews.size());
}

double rsim(const PaperBundle& bundle, const Similarity& sim) {
  if (bundle.reviews.size() < 2)
    throw DomainError("RSim: paper '" + bundle.paper_id + "' has fewer than two reviews");
  double best = 0.0;
  for (std::size_t i = 0; i < bundle.reviews.size(); ++i)
    for (std::size_t j = i + 1; j < bundle.reviews.size(); ++j)
      best = std::max(best, sim(bundle.reviews[i].text, bundle.reviews[j].text));
  return best;
}

std::vector<std::string> sentence_texts(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& [b, e] : split_sentences(text)) out.push_back(text.substr(b, e - b));
  return out;
}

double sf_irf_sentences(const std::vector<std::string>& target_sentences, std::size_t index,
                        const std::vector<std::vector<std::string>>& reference_sentences,
                        const Similarity& sim, double t) {
  if (index >= target_sentences.size())
    throw DomainError("SF-IRF: sentence index " + std::to_string(index) + " out of range");
  if (reference_sentences.empty()) throw DomainError("SF-IRF: empty reference review set");
  const auto& s = target_sentences[index];

  double occurrence = 0.0;
  for (std::size_t k = 0; k < target_sentences.size(); ++k) {
    const double w = k == index ? 1.0 : sim(s, target_sentences[k]);
    if (w >= t) occurrence += w;
  }
  double reference_hits = 0.0;
  for (const auto& review : reference_sentences) {
    double best = 0.0;
    for (const auto& other : review) best = std::max(best, sim(s, other));
    if (!review.empty() && best >= t) reference_hits += best;
  }
  const double n = static_cast<double>(target_sentences.size());
  const double m = static_cast<double>(reference_sentences.size());
  return (occurrence / n) * std::log((m + 1.0) / (reference_hits + 1.0));
}

std::vector<const Document*> reference_reviews(const Document& target, const PaperBundle& bundle) {
  std::vector<const Document*> refs;
  if (target.kind == Kind::MetaReview) {
    if (!bundle.meta_review || bundle.meta_review->id != target.id)
      throw InputError("meta-review '" + target.id + "' is not part of paper '" + bundle.paper_id + "'");
    for (const auto& r : bundle.reviews) refs.push_back(&r);
  } else if (target.kind == Kind::Review) {
    bool found = false;
    for (const auto& r : bundle.reviews) {
      if (r.id == target.id) {
        found = true;
      } else {
        refs.push_back(&r);
      }
    }
    if (!found) throw InputError("review '" + target.id + "' is not part of paper '" + bundle.paper_id + "'");
  } else {
    throw InputError("SF-IRF targets must be reviews or meta-reviews ('" + target.id + "')");
  }
  return refs;
}

namespace {

std::vector<std::vector<std::string>> reference_sentences(const Document& target, const PaperBundle& bundle) {
  std::vector<std::vector<std::string>> out;
  for (const auto* r : reference_reviews(target, bundle)) out.push_back(sentence_texts(r->text));
  if (out.empty())
    throw DomainError("SF-IRF: '" + target.id + "' has an empty reference set (paper '" + bundle.paper_id +
                      "' has a single review)");
  return out;
}

std::vector<std::string> target_sentences(const Document& target) {
  auto s = sentence_texts(target.text);
  if (s.empty()) throw DomainError("SF-IRF: '" + target.id + "' has no sentences");
  return s;
}

}  // namespace

double sf_irf(std::size_t sentence_index, const Document& target, const PaperBundle& bundle,
              const Similarity& sim, double t) {
  const auto refs = reference_sentences(target, bundle);
  return sf_irf_sentences(target_sentences(target), sentence_index, refs, sim, t);
}

double specificity(const Document& target, const PaperBundle& bundle, const Similarity& sim, double t) {
  const auto refs = reference_sentences(target, bundle);
  const auto sentences = target_sentences(target);
  double total = 0.0;
  for (std::size_t i = 0; i < sentences.size(); ++i) total += sf_irf_sentences(sentences, i, refs, sim, t);
  return total / static_cast<double>(sentences.size());
}

SemanticReport semantic_report(const PaperBundle& bundle, const Similarity& sim, double t) {
  std::vector<std::string> texts;
  auto add_doc = [&](const Document& d) {
    texts.push_back(d.text);
    for (auto& s : sentence_texts(d.text)) texts.push_back(std::move(s));
  };
  if (bundle.meta_review) add_doc(*bundle.meta_review);
  for (const auto& r : bundle.reviews) add_doc(r);
  sim.prefetch(texts);

  SemanticReport report;
  report.paper_id = bundle.paper_id;
  const auto nr = bundle.reviews.size();
  if (!bundle.meta_review) {
    report.skipped.push_back("no meta-review");
  } else if (nr == 0) {
    report.skipped.push_back("no reviews");
  } else {
    report.mrsim = mrsim(bundle, sim);
    report.meta_specificity = specificity(*bundle.meta_review, bundle, sim, t);
  }
  if (nr >= 2) {
    report.rsim = rsim(bundle, sim);
    for (const auto& r : bundle.reviews) report.review_specificity[r.id] = specificity(r, bundle, sim, t);
  } else {
    report.skipped.push_back("fewer than two reviews");
  }
  return report;
}

}  // namespace llmetrica
