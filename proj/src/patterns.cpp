#include "llmetrica/patterns.hpp"

#include <algorithm>
#include <regex>

#include "llmetrica/errors.hpp"

namespace llmetrica {

std::string_view feature_name(PatternFeature f) {
  switch (f) {
    case PatternFeature::Personability: return "personability";
    case PatternFeature::Interactivity: return "interactivity";
    case PatternFeature::AttentionToDetail: return "attention_to_detail";
  }
  return "?";
}

long PatternCounts::get(PatternFeature f) const {
  switch (f) {
    case PatternFeature::Personability: return personability;
    case PatternFeature::Interactivity: return interactivity;
    case PatternFeature::AttentionToDetail: return attention_to_detail;
  }
  return 0;
}

const std::vector<std::string>& first_person_pronouns() {
  static const std::vector<std::string> pronouns = {"i",  "me", "my",  "mine", "myself",
                                                    "we", "us", "our", "ours", "ourselves"};
  return pronouns;
}

long count_citations(std::string_view text) {
  // Alternatives are tried left to right at each position; the earliest
  // match wins, so "(Smith et al., 2019)" is one citation, not two.
  static const std::regex pattern(
      R"((?:https?://|www\.)[^\s<>()\[\]]+)"
      R"(|[Aa][Rr][Xx][Ii][Vv]\s*:?\s*\d{4}\.\d{4,5}(?:v\d+)?)"
      R"(|\([^()]*?[A-Z][A-Za-z'\-]+(?:\s+et\s+al\.?|\s+(?:and|&)\s+[A-Z][A-Za-z'\-]+)?,?\s+(?:19|20)\d{2}[a-z]?(?:\s*[;,][^()]*)?\))"
      R"(|\[\s*\d+(?:\s*[,\-]\s*\d+)*\s*\])"
      R"(|\bet\s+al\.)",
      std::regex::ECMAScript | std::regex::optimize);
  const std::string s(text);
  return static_cast<long>(std::distance(std::sregex_iterator(s.begin(), s.end(), pattern), std::sregex_iterator()));
}

PatternCounts count_patterns(const AnnotatedDocument& doc) {
  PatternCounts c;
  c.document_id = doc.document_id;
  const auto& pronouns = first_person_pronouns();
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const auto& sentence = doc.sentences[i];
    for (const auto& t : sentence.tokens)
      if (std::find(pronouns.begin(), pronouns.end(), t.lower) != pronouns.end()) ++c.personability;

    const auto text = doc.sentence_text(i);
    const auto last = text.find_last_not_of(" \t\r\n");
    if (last != std::string_view::npos ? text[last] == '?'
                                       : (!sentence.tokens.empty() && sentence.tokens.back().form == "?"))
      ++c.interactivity;
  }
  c.attention_to_detail = count_citations(doc.text);
  return c;
}

FeatureStats fp_fi(const std::vector<long>& counts) {
  if (counts.empty()) throw DomainError("fp_fi: empty group");
  long exhibitors = 0, occurrences = 0;
  for (long c : counts) {
    if (c < 0) throw DomainError("fp_fi: negative count");
    if (c >= 1) {
      ++exhibitors;
      occurrences += c;
    }
  }
  FeatureStats s;
  s.fp = static_cast<double>(exhibitors) / static_cast<double>(counts.size());
  s.fi = exhibitors == 0 ? 0.0 : static_cast<double>(occurrences) / static_cast<double>(exhibitors);
  return s;
}

FeatureStats fp_fi(const std::vector<PatternCounts>& group, PatternFeature feature) {
  std::vector<long> counts;
  counts.reserve(group.size());
  for (const auto& g : group) counts.push_back(g.get(feature));
  return fp_fi(counts);
}

}  // namespace llmetrica
