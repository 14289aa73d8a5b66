#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "llmetrica/corpus.hpp"

namespace fixtures {

/// A vocabulary entry with hand-checked properties. The oracles trust these
/// columns instead of re-deriving them with library code.
struct VocabWord {
  const char* form;
  const char* lower;
  bool alphabetic;
  int letters;
  int syllables;  // 0 for non-alphabetic entries
  const char* upos;
};

const std::vector<VocabWord>& vocabulary();

struct GenToken {
  std::string form;
  std::string upos;
  std::string deprel;
  int head = 0;
  const VocabWord* word = nullptr;  // null for tokens not taken from the vocabulary
};

struct GenDocument {
  std::string id;
  std::vector<std::vector<GenToken>> sentences;

  /// Space-joined forms, sentences joined by a space.
  std::string text() const;
  std::string conllu() const;
};

std::string conllu_of(const std::vector<GenDocument>& docs);

/// Random vocabulary document with dependency labels (1-6 sentences, 1-14 tokens each).
GenDocument random_document(std::mt19937_64& rng, const std::string& id);

/// Dependency labels the random generator draws from.
const std::vector<std::string>& deprel_pool();

// --- word-preference fixture -----------------------------------------------

struct PlantedUnit {
  std::string word;
  std::string pos;
  int cnt_h;
  int cnt_l;
};

/// delta/NOUN 10 -> 90 and comprehensive/ADJ 20 -> 60 are LLM-preferred;
/// basic/ADJ is reversed; the rest are balanced.
std::vector<PlantedUnit> delta_plan();

struct PairedCorpus {
  llmetrica::Corpus corpus;
  std::vector<GenDocument> docs;  // annotations for every corpus document
};

/// `n` papers, each with a human and a gpt4o abstract. Unit u appears in the
/// first u.cnt_h human and first u.cnt_l LLM abstracts. With `identical`, LLM
/// abstracts copy the human ones.
PairedCorpus delta_corpus(int n = 100, bool identical = false);

/// Human abstracts of short words; refined (gpt4o) and synthesized (gemini)
/// abstracts drawn from long polysyllabic words with fewer stopwords.
PairedCorpus long_word_corpus(int papers = 40, std::uint64_t seed = 7);

/// `papers` papers with a human abstract and one to three LLM abstracts.
llmetrica::Corpus split_corpus(int papers);

/// Papers with reviews and meta-reviews for the semantic/patterns commands.
llmetrica::Corpus review_corpus(int papers = 6);

/// Fresh empty directory under the system temp directory.
std::string make_temp_dir(const std::string& prefix);

}  // namespace fixtures
