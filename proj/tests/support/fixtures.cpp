#include "fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

namespace fixtures {

using llmetrica::Corpus;
using llmetrica::Document;
using llmetrica::Kind;
using llmetrica::Provenance;

const std::vector<VocabWord>& vocabulary() {
  // form, lower, alphabetic, letters, syllables, upos
  static const std::vector<VocabWord> words = {
      {"The", "the", true, 3, 1, "DET"},
      {"the", "the", true, 3, 1, "DET"},
      {"cat", "cat", true, 3, 1, "NOUN"},
      {"We", "we", true, 2, 1, "PRON"},
      {"propose", "propose", true, 7, 2, "VERB"},
      {"a", "a", true, 1, 1, "DET"},
      {"model", "model", true, 5, 2, "NOUN"},
      {"methodology", "methodology", true, 11, 5, "NOUN"},
      {"methodologies", "methodologies", true, 13, 5, "NOUN"},
      {"comprehensive", "comprehensive", true, 13, 4, "ADJ"},
      {"enhance", "enhance", true, 7, 2, "VERB"},
      {"table", "table", true, 5, 2, "NOUN"},
      {"free", "free", true, 4, 1, "ADJ"},
      {"little", "little", true, 6, 2, "ADJ"},
      {"whale", "whale", true, 5, 1, "NOUN"},
      {"rhythm", "rhythm", true, 6, 1, "NOUN"},
      {"eye", "eye", true, 3, 1, "NOUN"},
      {"queue", "queue", true, 5, 1, "NOUN"},
      {"don't", "don't", true, 4, 1, "AUX"},
      {"Café", "café", true, 4, 1, "NOUN"},
      {"naïve", "naïve", true, 5, 1, "ADJ"},
      {"representation", "representation", true, 14, 5, "NOUN"},
      {"characterization", "characterization", true, 16, 6, "NOUN"},
      {"results", "results", true, 7, 2, "NOUN"},
      {"analysis", "analysis", true, 8, 4, "NOUN"},
      {"strongly", "strongly", true, 8, 2, "ADV"},
      {"good", "good", true, 4, 1, "ADJ"},
      {"excellent", "excellent", true, 9, 3, "ADJ"},
      {"bad", "bad", true, 3, 1, "ADJ"},
      {"interesting", "interesting", true, 11, 4, "ADJ"},
      {"YOU", "you", true, 3, 1, "PRON"},
      {"I", "i", true, 1, 1, "PRON"},
      {"state", "state", true, 5, 1, "NOUN"},
      {"is", "is", true, 2, 1, "AUX"},
      {"of", "of", true, 2, 1, "ADP"},
      {"and", "and", true, 3, 1, "CCONJ"},
      {"unprecedented", "unprecedented", true, 13, 5, "ADJ"},
      {"Meticulously", "meticulously", true, 12, 5, "ADV"},
      {"be", "be", true, 2, 1, "AUX"},
      {"Hyperparameters", "hyperparameters", true, 15, 6, "NOUN"},
      {"idea", "idea", true, 4, 2, "NOUN"},
      {"ice", "ice", true, 3, 1, "NOUN"},
      {"Zürich", "zürich", true, 6, 1, "PROPN"},
      {"rock'n'roll", "rock'n'roll", true, 9, 2, "NOUN"},
      {".", ".", false, 0, 0, "PUNCT"},
      {",", ",", false, 0, 0, "PUNCT"},
      {"(", "(", false, 0, 0, "PUNCT"},
      {")", ")", false, 0, 0, "PUNCT"},
      {"-", "-", false, 0, 0, "PUNCT"},
      {"?", "?", false, 0, 0, "PUNCT"},
      {"42", "42", false, 0, 0, "NUM"},
      {"3.5", "3.5", false, 0, 0, "NUM"},
      {"x2", "x2", false, 1, 0, "NOUN"},
      {"'s", "'s", false, 1, 0, "PART"},
  };
  return words;
}

const std::vector<std::string>& deprel_pool() {
  static const std::vector<std::string> pool = {"nsubj", "obj",   "advcl", "ccomp",     "xcomp",      "acl",
                                                "acl:relcl", "nmod:poss", "det", "amod", "punct", "obl:tmod",
                                                "relcl", "compound", "advmod"};
  return pool;
}

std::string GenDocument::text() const {
  std::string out;
  for (const auto& s : sentences)
    for (const auto& t : s) out += (out.empty() ? "" : " ") + t.form;
  return out;
}

std::string GenDocument::conllu() const {
  std::string out = "# newdoc id = " + id + "\n";
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    std::string text;
    for (const auto& t : sentences[si]) text += (text.empty() ? "" : " ") + t.form;
    out += "# sent_id = " + id + "-" + std::to_string(si + 1) + "\n# text = " + text + "\n";
    for (std::size_t i = 0; i < sentences[si].size(); ++i) {
      const auto& t = sentences[si][i];
      out += std::to_string(i + 1) + "\t" + t.form + "\t_\t" + t.upos + "\t_\t_\t" + std::to_string(t.head) + "\t" +
             t.deprel + "\t_\t_\n";
    }
    out += "\n";
  }
  return out;
}

std::string conllu_of(const std::vector<GenDocument>& docs) {
  std::string out;
  for (const auto& d : docs) out += d.conllu();
  return out;
}

GenDocument random_document(std::mt19937_64& rng, const std::string& id) {
  const auto& vocab = vocabulary();
  const auto& rels = deprel_pool();
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  GenDocument doc{id, {}};
  const std::size_t n_sentences = 1 + pick(6);
  for (std::size_t s = 0; s < n_sentences; ++s) {
    std::vector<GenToken> sentence;
    const std::size_t n_tokens = 1 + pick(14);
    for (std::size_t i = 0; i < n_tokens; ++i) {
      const VocabWord& w = vocab[pick(vocab.size())];
      GenToken t{w.form, w.upos, i == 0 ? "root" : rels[pick(rels.size())], i == 0 ? 0 : 1 + static_cast<int>(pick(i)),
                 &w};
      sentence.push_back(std::move(t));
    }
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

std::vector<PlantedUnit> delta_plan() {
  return {
      {"delta", "NOUN", 10, 90},         {"comprehensive", "ADJ", 20, 60}, {"basic", "ADJ", 90, 10},
      {"model", "NOUN", 50, 50},         {"method", "NOUN", 30, 30},       {"delta", "ADJ", 15, 15},
      {"results", "NOUN", 100, 100},     {"paper", "NOUN", 70, 70},
  };
}

namespace {

std::string pad(int i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

GenToken word(const std::string& form, const std::string& upos, const std::string& deprel, int head) {
  return GenToken{form, upos, deprel, head, nullptr};
}

Document make_doc(std::string id, std::string paper, Kind kind, Provenance prov, int year, std::string text) {
  Document d;
  d.id = std::move(id);
  d.paper_id = std::move(paper);
  d.kind = kind;
  d.provenance = std::move(prov);
  d.venue = "ICLR";
  d.year = year;
  d.text = std::move(text);
  return d;
}

}  // namespace

PairedCorpus delta_corpus(int n, bool identical) {
  const auto plan = delta_plan();
  PairedCorpus out;
  auto build = [&](int i, bool llm) {
    std::vector<GenToken> s = {word("We", "PRON", "nsubj", 2), word("study", "VERB", "root", 0)};
    for (const auto& u : plan) {
      const int cnt = llm && !identical ? u.cnt_l : u.cnt_h;
      if (i < cnt) s.push_back(word(u.word, u.pos, u.pos == "ADJ" ? "amod" : "obj", 2));
    }
    s.push_back(word(".", "PUNCT", "punct", 2));
    return s;
  };
  for (int i = 0; i < n; ++i) {
    const std::string paper = "p" + pad(i);
    for (bool llm : {false, true}) {
      GenDocument g{paper + ":abstract:" + (llm ? "gpt4o" : "human"), {build(i, llm)}};
      out.corpus.add(make_doc(g.id, paper, Kind::Abstract,
                              llm ? Provenance::synthesized("gpt4o") : Provenance::human(), 2023 + i % 2, g.text()));
      out.docs.push_back(std::move(g));
    }
  }
  return out;
}

PairedCorpus long_word_corpus(int papers, std::uint64_t seed) {
  static const std::vector<std::string> short_words = {"we", "the", "cat", "ran", "to", "a", "big", "red",
                                                       "box", "and", "it", "was", "fun", "of", "in", "data"};
  static const std::vector<std::string> long_words = {
      "comprehensive", "methodology", "representation", "characterization", "unprecedented",
      "investigation", "the", "demonstrates", "substantially", "of", "performance", "considerations"};
  std::mt19937_64 rng(seed);
  PairedCorpus out;
  auto sentence = [&](const std::vector<std::string>& pool, std::size_t len) {
    std::vector<GenToken> s;
    for (std::size_t i = 0; i < len; ++i) {
      std::string w = pool[rng() % pool.size()];
      if (i == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
      s.push_back(word(w, "X", i == 0 ? "root" : "dep", i == 0 ? 0 : 1));
    }
    s.push_back(word(".", "PUNCT", "punct", 1));
    return s;
  };
  for (int i = 0; i < papers; ++i) {
    const std::string paper = "lw" + pad(i);
    struct Variant {
      const char* suffix;
      Provenance prov;
      const std::vector<std::string>* pool;
    };
    const Variant variants[] = {{"human", Provenance::human(), &short_words},
                                {"gpt4o", Provenance::refined("gpt4o"), &long_words},
                                {"gemini", Provenance::synthesized("gemini"), &long_words}};
    for (const auto& v : variants) {
      GenDocument g{paper + ":abstract:" + v.suffix, {}};
      const std::size_t n_sent = 2 + rng() % 3;
      for (std::size_t s = 0; s < n_sent; ++s) g.sentences.push_back(sentence(*v.pool, 6 + rng() % 6));
      out.corpus.add(make_doc(g.id, paper, Kind::Abstract, v.prov, 2022 + i % 3, g.text()));
      out.docs.push_back(std::move(g));
    }
  }
  return out;
}

Corpus split_corpus(int papers) {
  static const char* models[] = {"claude", "gemini", "gpt4o"};
  Corpus c;
  for (int i = 0; i < papers; ++i) {
    const std::string paper = "s" + std::to_string(100000 + i);
    c.add(make_doc(paper + ":h", paper, Kind::Abstract, Provenance::human(), 2023, "Human abstract " + paper + "."));
    const int n_llm = 1 + i % 3;
    for (int k = 0; k < n_llm; ++k) {
      const std::string m = models[(i + k) % 3];
      c.add(make_doc(paper + ":" + m, paper, Kind::Abstract,
                     k % 2 ? Provenance::synthesized(m) : Provenance::refined(m), 2023,
                     "Generated abstract " + paper + " by " + m + "."));
    }
  }
  return c;
}

Corpus review_corpus(int papers) {
  static const char* sentences[] = {
      "The method is novel and the experiments are thorough.",
      "Why does the baseline use a smaller learning rate?",
      "I think the writing is clear.",
      "The ablation in Table 2 is convincing (Smith et al., 2021).",
      "We recommend acceptance after minor revisions.",
      "The related work misses https://arxiv.org/abs/2101.00001 entirely.",
      "Results on the second benchmark are weaker [12].",
      "My main concern is the limited scale of evaluation.",
  };
  Corpus c;
  for (int i = 0; i < papers; ++i) {
    const std::string paper = "r" + pad(i);
    const int year = 2021 + i % 3;
    const int n_reviews = 1 + i % 4;
    for (int r = 0; r < n_reviews; ++r) {
      std::string text;
      for (int k = 0; k < 3; ++k) text += std::string(text.empty() ? "" : " ") + sentences[(i + r * 3 + k) % 8];
      c.add(make_doc(paper + ":review:" + std::to_string(r), paper, Kind::Review, Provenance::human(), year, text));
    }
    if (i % 5 != 4)
      c.add(make_doc(paper + ":meta", paper, Kind::MetaReview, Provenance::human(), year,
                     std::string(sentences[i % 8]) + " " + sentences[(i + 4) % 8]));
    if (i % 2 == 0) {
      c.add(make_doc(paper + ":meta:gpt4o", paper, Kind::MetaReview, Provenance::refined("gpt4o"), year,
                     "The reviewers meticulously commend the comprehensive evaluation. " + std::string(sentences[i % 8])));
      c.add(make_doc(paper + ":review:gpt4o", paper, Kind::Review, Provenance::synthesized("gpt4o"), year,
                     "This paper delves into an intriguing problem. Notably, the framework is comprehensive."));
    }
  }
  return c;
}

std::string make_temp_dir(const std::string& prefix) {
  std::string tmpl = (std::filesystem::temp_directory_path() / (prefix + "-XXXXXX")).string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  return tmpl;
}

}  // namespace fixtures
