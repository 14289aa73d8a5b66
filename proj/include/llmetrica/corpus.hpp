#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace llmetrica {

enum class Kind { Title, Abstract, Content, Review, MetaReview };

std::string_view to_string(Kind kind);
/// Accepts the JSONL spellings: title, abstract, content, review, meta_review.
std::optional<Kind> parse_kind(std::string_view s);

struct Provenance {
  enum class Source { Human, LlmSynthesized, LlmRefined, Unknown };

  Source source = Source::Unknown;
  std::string model;  // non-empty iff source is an LLM variant

  static Provenance human() { return {Source::Human, {}}; }
  static Provenance unknown() { return {Source::Unknown, {}}; }
  static Provenance synthesized(std::string model) { return {Source::LlmSynthesized, std::move(model)}; }
  static Provenance refined(std::string model) { return {Source::LlmRefined, std::move(model)}; }

  bool is_llm() const { return source == Source::LlmSynthesized || source == Source::LlmRefined; }

  /// Source tag as used in the JSONL `provenance` field.
  std::string_view source_name() const;
  /// "human", "unknown", or "<source>:<model>" (e.g. "llm_refined:gpt4o").
  std::string label() const;

  auto operator<=>(const Provenance&) const = default;
};

struct Document {
  std::string id;
  std::string paper_id;
  Kind kind = Kind::Abstract;
  Provenance provenance;
  std::string venue;
  int year = 0;
  std::string text;

  bool operator==(const Document&) const = default;
};

/// One paper P = {T, A, C, R, MR}. Slots hold the non-LLM documents; LLM
/// variants can be swapped in with Corpus::bundle_with.
struct PaperBundle {
  std::string paper_id;
  std::optional<Document> title;
  std::optional<Document> abstract;
  std::optional<Document> content;
  std::vector<Document> reviews;
  std::optional<Document> meta_review;
};

struct DocumentQuery {
  std::optional<int> year;
  std::optional<std::string> venue;
  std::optional<Kind> kind;
  std::optional<Provenance> provenance;
};

/// Immutable-after-build document collection with paper bundles and
/// (year, venue, kind, provenance) indexes. Iteration follows insertion order.
class Corpus {
 public:
  Corpus() = default;

  /// Adds a document; throws InputError on an invariant violation
  /// (empty/duplicate id, empty text, LLM provenance without model).
  void add(Document doc);

  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

  const Document* find(const std::string& id) const;
  const Document& at(const std::string& id) const;

  /// Paper ids in first-seen order.
  const std::vector<std::string>& paper_ids() const { return paper_order_; }
  const std::map<std::string, PaperBundle>& bundles() const { return bundles_; }
  const PaperBundle* bundle(const std::string& paper_id) const;

  /// A paper's bundle with `variant` substituted: a MetaReview replaces the
  /// meta-review slot, a Review is appended to R, other kinds replace their slot.
  PaperBundle bundle_with(const Document& variant) const;

  /// All documents of a paper, in insertion order.
  std::vector<const Document*> documents_of(const std::string& paper_id) const;

  /// Document ids matching every set field of the query, in insertion order.
  std::vector<std::string> select(const DocumentQuery& query) const;

  /// Index snapshot keyed by field value -> ids; used to audit index consistency.
  struct Indexes {
    std::map<int, std::vector<std::string>> by_year;
    std::map<std::string, std::vector<std::string>> by_venue;
    std::map<Kind, std::vector<std::string>> by_kind;
    std::map<Provenance, std::vector<std::string>> by_provenance;
    bool operator==(const Indexes&) const = default;
  };
  const Indexes& indexes() const { return indexes_; }
  static Indexes build_indexes(const std::vector<Document>& docs);

 private:
  std::vector<Document> documents_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::vector<std::string> paper_order_;
  std::map<std::string, PaperBundle> bundles_;
  Indexes indexes_;
};

/// One JSON object per line (see README for the schema). Blank lines are
/// ignored; errors carry the 1-based line number.
Corpus parse_jsonl(std::string_view text, const std::string& source = "<jsonl>");
Corpus load_jsonl(const std::string& path);

std::string to_jsonl(const Corpus& corpus);
void write_jsonl(const Corpus& corpus, const std::string& path);

struct OpenReviewImport {
  Corpus corpus;
  std::size_t skipped = 0;  // notes without usable review/abstract text
};

/// Imports an offline OpenReview dump (JSON array of notes). Every imported
/// document gets provenance Unknown.
OpenReviewImport parse_openreview_dump(std::string_view json_text, const std::string& venue, int year);
OpenReviewImport import_openreview_dump(const std::string& path, const std::string& venue, int year);

}  // namespace llmetrica
