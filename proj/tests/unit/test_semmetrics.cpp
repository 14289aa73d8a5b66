#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "llmetrica/errors.hpp"
#include "llmetrica/semmetrics.hpp"
#include "mock_similarity.hpp"
#include "oracles.hpp"

using namespace llmetrica;
using fixtures::sentence_label;
using fixtures::TableSimilarity;

namespace {

std::string join(const std::vector<int>& ids) {
  std::string s;
  for (int i : ids) s += (s.empty() ? "" : " ") + sentence_label(i);
  return s;
}

Document doc(std::string id, Kind kind, std::string text) {
  return Document{std::move(id), "p", kind, Provenance::human(), "v", 2024, std::move(text)};
}

/// Fills every pair of `ids` from the matrix.
void load(TableSimilarity& sim, const oracle::Matrix& m) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) sim.set(sentence_label(int(a)), sentence_label(int(b)), m[a][b]);
}

int single_id(const std::string& text) {
  if (text.size() < 3 || text[0] != 'S' || text.back() != '.' || text.find(' ') != std::string::npos) return -1;
  return std::stoi(text.substr(1, text.size() - 2));
}

}  // namespace

TEST_CASE("worked example: a sentence matching nothing") {
  // Target with four sentences, s0 similar only to itself; three reference reviews.
  oracle::Matrix m(8, std::vector<double>(8, 0.1));
  TableSimilarity sim;
  load(sim, m);
  const std::vector<std::string> target = {"S0.", "S1.", "S2.", "S3."};
  const std::vector<std::vector<std::string>> refs = {{"S4."}, {"S5.", "S6."}, {"S7."}};
  const double v = sf_irf_sentences(target, 0, refs, sim, 0.5);
  CHECK(std::fabs(v - 0.25 * std::log(4.0)) < 1e-12);
  CHECK(std::fabs(v - 0.3466) < 1e-4);
}

TEST_CASE("a sentence repeated in every reference review scores zero") {
  oracle::Matrix m(6, std::vector<double>(6, 0.2));
  TableSimilarity sim;
  load(sim, m);
  const std::vector<std::string> target = {"S0.", "S1."};
  const std::vector<std::vector<std::string>> refs = {{"S0.", "S2."}, {"S3.", "S0."}, {"S0."}};
  CHECK(sf_irf_sentences(target, 0, refs, sim, 0.5) == 0.0);
}

TEST_CASE("threshold is inclusive and soft counts carry their weight") {
  oracle::Matrix m(4, std::vector<double>(4, 0.0));
  m[0][1] = m[1][0] = 0.5;
  m[0][2] = m[2][0] = 0.49;
  m[0][3] = m[3][0] = 0.8;
  TableSimilarity sim;
  load(sim, m);
  // O = 1 + 0.5 (S1 at exactly t) ; S2 below t ; one reference with best 0.8.
  const double v = sf_irf_sentences({"S0.", "S1.", "S2."}, 0, {{"S3."}}, sim, 0.5);
  CHECK(v == doctest::Approx(1.5 / 3.0 * std::log(2.0 / 1.8)).epsilon(1e-14));
}

TEST_CASE("bundle-level metrics against brute force") {
  std::mt19937_64 rng(99);
  const double grid[] = {0.0, 0.1, 0.3, 0.5, 0.6, 0.75, 0.9, 1.0};
  for (int round = 0; round < 200; ++round) {
    const int n_sent_ids = 30;
    oracle::Matrix m(n_sent_ids, std::vector<double>(n_sent_ids, 0.0));
    for (int a = 0; a < n_sent_ids; ++a)
      for (int b = a + 1; b < n_sent_ids; ++b) m[a][b] = m[b][a] = grid[rng() % 8];
    TableSimilarity sim;
    load(sim, m);

    const int n_reviews = 1 + int(rng() % 5);
    std::vector<std::vector<int>> reviews;
    for (int r = 0; r < n_reviews; ++r) {
      std::vector<int> ids;
      const int len = 1 + int(rng() % 6);
      for (int k = 0; k < len; ++k) ids.push_back(int(rng() % n_sent_ids));
      reviews.push_back(ids);
    }
    std::vector<int> meta;
    for (int k = 0, len = 1 + int(rng() % 6); k < len; ++k) meta.push_back(int(rng() % n_sent_ids));

    PaperBundle bundle;
    bundle.paper_id = "p";
    for (int r = 0; r < n_reviews; ++r)
      bundle.reviews.push_back(doc("r" + std::to_string(r), Kind::Review, join(reviews[r])));
    bundle.meta_review = doc("m", Kind::MetaReview, join(meta));

    // Document-level similarities: any value works, pick from the grid.
    std::vector<std::string> texts = {bundle.meta_review->text};
    for (const auto& r : bundle.reviews) texts.push_back(r.text);
    oracle::Matrix docsim(texts.size(), std::vector<double>(texts.size(), 1.0));
    std::map<std::pair<std::string, std::string>, double> drawn;  // repeated texts reuse their value
    for (std::size_t a = 0; a < texts.size(); ++a)
      for (std::size_t b = a + 1; b < texts.size(); ++b) {
        // Single-sentence documents share their entry with the sentence table.
        const auto ia = single_id(texts[a]), ib = single_id(texts[b]);
        const auto key = std::minmax(texts[a], texts[b]);
        double v = texts[a] == texts[b] ? 1.0 : ia >= 0 && ib >= 0 ? m[ia][ib] : -1.0;
        if (v < 0) {
          const auto it = drawn.find(key);
          v = it != drawn.end() ? it->second : drawn[key] = grid[rng() % 8];
        }
        docsim[a][b] = docsim[b][a] = v;
        if (texts[a] != texts[b]) sim.set(texts[a], texts[b], v);
      }

    double want_mr = 0.0;
    for (int r = 0; r < n_reviews; ++r) want_mr += docsim[0][r + 1];
    want_mr /= n_reviews;
    CHECK(std::fabs(mrsim(bundle, sim) - want_mr) <= 1e-9);
    if (n_reviews >= 2) {
      double want_r = 0.0;
      for (int a = 1; a <= n_reviews; ++a)
        for (int b = a + 1; b <= n_reviews; ++b) want_r = std::max(want_r, docsim[a][b]);
      CHECK(std::fabs(rsim(bundle, sim) - want_r) <= 1e-9);
    } else {
      CHECK_THROWS_AS(rsim(bundle, sim), DomainError);
    }

    for (std::size_t i = 0; i < meta.size(); ++i)
      CHECK(std::fabs(sf_irf(i, *bundle.meta_review, bundle, sim) - oracle::sf_irf(meta, i, reviews, m)) <= 1e-9);
    for (int r = 0; r < n_reviews; ++r) {
      std::vector<std::vector<int>> others;
      for (int o = 0; o < n_reviews; ++o)
        if (o != r) others.push_back(reviews[o]);
      if (others.empty()) {
        CHECK_THROWS_AS(sf_irf(0, bundle.reviews[r], bundle, sim), DomainError);
        continue;
      }
      double mean = 0.0;
      for (std::size_t i = 0; i < reviews[r].size(); ++i) {
        const double want = oracle::sf_irf(reviews[r], i, others, m);
        CHECK(std::fabs(sf_irf(i, bundle.reviews[r], bundle, sim) - want) <= 1e-9);
        mean += want;
      }
      mean /= double(reviews[r].size());
      CHECK(std::fabs(specificity(bundle.reviews[r], bundle, sim) - mean) <= 1e-9);
    }
  }
}

TEST_CASE("monotonic in the reference hits") {
  oracle::Matrix m(5, std::vector<double>(5, 0.0));
  TableSimilarity low, high;
  load(low, m);
  m[0][3] = m[3][0] = 0.9;
  load(high, m);
  const std::vector<std::string> target = {"S0.", "S1."};
  const std::vector<std::vector<std::string>> refs = {{"S3."}, {"S4."}};
  CHECK(sf_irf_sentences(target, 0, refs, high) < sf_irf_sentences(target, 0, refs, low));
}

TEST_CASE("reference sets and missing parts") {
  PaperBundle b;
  b.paper_id = "p";
  b.reviews = {doc("r1", Kind::Review, "S1."), doc("r2", Kind::Review, "S2.")};
  CHECK(reference_reviews(b.reviews[0], b).size() == 1);
  CHECK_THROWS_AS(reference_reviews(doc("zz", Kind::Review, "S3."), b), InputError);
  CHECK_THROWS_AS(reference_reviews(doc("a", Kind::Abstract, "S3."), b), InputError);
  TableSimilarity sim;
  sim.set("S1.", "S2.", 0.3);
  CHECK_THROWS_AS(mrsim(b, sim), DomainError);

  const auto report = semantic_report(b, sim);
  CHECK_FALSE(report.mrsim);
  CHECK(report.rsim == 0.3);
  CHECK(report.review_specificity.size() == 2);
  CHECK(report.skipped == std::vector<std::string>{"no meta-review"});
}
