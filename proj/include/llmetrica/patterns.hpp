#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "llmetrica/text.hpp"

namespace llmetrica {

enum class PatternFeature { Personability, Interactivity, AttentionToDetail };
inline constexpr std::array<PatternFeature, 3> kAllPatternFeatures = {
    PatternFeature::Personability, PatternFeature::Interactivity, PatternFeature::AttentionToDetail};

std::string_view feature_name(PatternFeature f);

struct PatternCounts {
  std::string document_id;
  long personability = 0;        // first-person pronoun tokens
  long interactivity = 0;        // sentences ending in '?'
  long attention_to_detail = 0;  // citation-like spans

  long get(PatternFeature f) const;
};

/// First-person pronouns counted for personability.
const std::vector<std::string>& first_person_pronouns();

/// Non-overlapping citation matches: URLs, arXiv ids, parenthetical
/// author-year references, bracketed numeric references, bare "et al.".
long count_citations(std::string_view text);

PatternCounts count_patterns(const AnnotatedDocument& doc);

struct FeatureStats {
  double fp = 0.0;  // share of documents with count >= 1
  double fi = 0.0;  // mean count among those documents; 0 when fp = 0
};

FeatureStats fp_fi(const std::vector<long>& counts);
FeatureStats fp_fi(const std::vector<PatternCounts>& group, PatternFeature feature);

}  // namespace llmetrica
