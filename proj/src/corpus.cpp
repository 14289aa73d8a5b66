#include "llmetrica/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "llmetrica/errors.hpp"

namespace llmetrica {

namespace {

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Title: return "title";
    case Kind::Abstract: return "abstract";
    case Kind::Content: return "content";
    case Kind::Review: return "review";
    case Kind::MetaReview: return "meta_review";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind k : {Kind::Title, Kind::Abstract, Kind::Content, Kind::Review, Kind::MetaReview})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::string_view Provenance::source_name() const {
  switch (source) {
    case Source::Human: return "human";
    case Source::LlmSynthesized: return "llm_synthesized";
    case Source::LlmRefined: return "llm_refined";
    case Source::Unknown: return "unknown";
  }
  return "?";
}

std::string Provenance::label() const {
  std::string out(source_name());
  if (is_llm()) out += ":" + model;
  return out;
}

void Corpus::add(Document doc) {
  if (doc.id.empty()) throw InputError("document id is empty");
  if (by_id_.count(doc.id)) throw InputError("duplicate document id '" + doc.id + "'");
  if (doc.paper_id.empty()) throw InputError("document '" + doc.id + "' has an empty paper_id");
  if (blank(doc.text)) throw InputError("document '" + doc.id + "' has empty text");
  if (doc.provenance.is_llm() && doc.provenance.model.empty())
    throw InputError("document '" + doc.id + "' has LLM provenance without a model");

  auto [it, inserted] = bundles_.try_emplace(doc.paper_id);
  if (inserted) {
    it->second.paper_id = doc.paper_id;
    paper_order_.push_back(doc.paper_id);
  }
  if (!doc.provenance.is_llm()) {
    auto& b = it->second;
    auto fill = [&](std::optional<Document>& slot) {
      if (slot) throw InputError("paper '" + doc.paper_id + "' has two non-LLM " +
                                 std::string(to_string(doc.kind)) + " documents ('" + slot->id +
                                 "', '" + doc.id + "')");
      slot = doc;
    };
    switch (doc.kind) {
      case Kind::Title: fill(b.title); break;
      case Kind::Abstract: fill(b.abstract); break;
      case Kind::Content: fill(b.content); break;
      case Kind::Review: b.reviews.push_back(doc); break;
      case Kind::MetaReview: fill(b.meta_review); break;
    }
  }
  indexes_.by_year[doc.year].push_back(doc.id);
  indexes_.by_venue[doc.venue].push_back(doc.id);
  indexes_.by_kind[doc.kind].push_back(doc.id);
  indexes_.by_provenance[doc.provenance].push_back(doc.id);
  by_id_.emplace(doc.id, documents_.size());
  documents_.push_back(std::move(doc));
}

const Document* Corpus::find(const std::string& id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &documents_[it->second];
}

const Document& Corpus::at(const std::string& id) const {
  if (const auto* d = find(id)) return *d;
  throw InputError("unknown document id '" + id + "'");
}

const PaperBundle* Corpus::bundle(const std::string& paper_id) const {
  const auto it = bundles_.find(paper_id);
  return it == bundles_.end() ? nullptr : &it->second;
}

PaperBundle Corpus::bundle_with(const Document& variant) const {
  const auto* base = bundle(variant.paper_id);
  PaperBundle b = base ? *base : PaperBundle{variant.paper_id, {}, {}, {}, {}, {}};
  switch (variant.kind) {
    case Kind::Title: b.title = variant; break;
    case Kind::Abstract: b.abstract = variant; break;
    case Kind::Content: b.content = variant; break;
    case Kind::MetaReview: b.meta_review = variant; break;
    case Kind::Review:
      if (std::none_of(b.reviews.begin(), b.reviews.end(),
                       [&](const Document& r) { return r.id == variant.id; }))
        b.reviews.push_back(variant);
      break;
  }
  return b;
}

std::vector<const Document*> Corpus::documents_of(const std::string& paper_id) const {
  std::vector<const Document*> out;
  for (const auto& d : documents_)
    if (d.paper_id == paper_id) out.push_back(&d);
  return out;
}

std::vector<std::string> Corpus::select(const DocumentQuery& q) const {
  std::vector<std::string> out;
  for (const auto& d : documents_) {
    if (q.year && d.year != *q.year) continue;
    if (q.venue && d.venue != *q.venue) continue;
    if (q.kind && d.kind != *q.kind) continue;
    if (q.provenance && d.provenance != *q.provenance) continue;
    out.push_back(d.id);
  }
  return out;
}

Corpus::Indexes Corpus::build_indexes(const std::vector<Document>& docs) {
  Indexes idx;
  for (const auto& d : docs) {
    idx.by_year[d.year].push_back(d.id);
    idx.by_venue[d.venue].push_back(d.id);
    idx.by_kind[d.kind].push_back(d.id);
    idx.by_provenance[d.provenance].push_back(d.id);
  }
  return idx;
}

namespace {

std::string required_string(const nlohmann::json& obj, const char* key, const std::string& source,
                            std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(source, line, std::string("missing required field '") + key + "'");
  if (!it->is_string()) throw ParseError(source, line, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

Document document_from_json(const nlohmann::json& obj, const std::string& source, std::size_t line) {
  if (!obj.is_object()) throw ParseError(source, line, "expected a JSON object");
  Document d;
  d.id = required_string(obj, "id", source, line);
  d.paper_id = required_string(obj, "paper_id", source, line);
  const auto kind = required_string(obj, "kind", source, line);
  const auto parsed_kind = parse_kind(kind);
  if (!parsed_kind) throw ParseError(source, line, "unknown kind '" + kind + "'");
  d.kind = *parsed_kind;

  const auto prov = required_string(obj, "provenance", source, line);
  std::string model;
  if (const auto it = obj.find("model"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError(source, line, "field 'model' must be a string");
    model = it->get<std::string>();
  }
  if (prov == "human") {
    d.provenance = Provenance::human();
  } else if (prov == "unknown") {
    d.provenance = Provenance::unknown();
  } else if (prov == "llm_synthesized") {
    d.provenance = Provenance::synthesized(model);
  } else if (prov == "llm_refined") {
    d.provenance = Provenance::refined(model);
  } else {
    throw ParseError(source, line, "unknown provenance '" + prov + "'");
  }
  if (d.provenance.is_llm() && model.empty())
    throw ParseError(source, line, "provenance '" + prov + "' requires a non-empty 'model'");
  if (!d.provenance.is_llm() && !model.empty())
    throw ParseError(source, line, "'model' is only allowed with LLM provenance");

  d.venue = required_string(obj, "venue", source, line);
  const auto year = obj.find("year");
  if (year == obj.end()) throw ParseError(source, line, "missing required field 'year'");
  if (!year->is_number_integer()) throw ParseError(source, line, "field 'year' must be an integer");
  d.year = year->get<int>();
  d.text = required_string(obj, "text", source, line);
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Corpus parse_jsonl(std::string_view text, const std::string& source) {
  Corpus corpus;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (blank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, line_no, std::string("malformed JSON: ") + e.what());
    }
    try {
      corpus.add(document_from_json(obj, source, line_no));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return corpus;
}

Corpus load_jsonl(const std::string& path) { return parse_jsonl(read_file(path), path); }

std::string to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& d : corpus.documents()) {
    nlohmann::ordered_json obj;
    obj["id"] = d.id;
    obj["paper_id"] = d.paper_id;
    obj["kind"] = to_string(d.kind);
    obj["provenance"] = d.provenance.source_name();
    if (d.provenance.is_llm()) obj["model"] = d.provenance.model;
    obj["venue"] = d.venue;
    obj["year"] = d.year;
    obj["text"] = d.text;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

void write_jsonl(const Corpus& corpus, const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << to_jsonl(corpus);
}

namespace {

// OpenReview v1 stores content values as plain strings, v2 wraps them as {"value": ...}.
std::optional<std::string> content_text(const nlohmann::json& content, const char* key) {
  const auto it = content.find(key);
  if (it == content.end()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_object()) {
    const auto v = it->find("value");
    if (v != it->end() && v->is_string()) return v->get<std::string>();
  }
  return std::nullopt;
}

std::optional<std::string> first_of(const nlohmann::json& content, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (auto v = content_text(content, k)) return v;
  return std::nullopt;
}

}  // namespace

OpenReviewImport parse_openreview_dump(std::string_view json_text, const std::string& venue, int year) {
  nlohmann::json notes;
  try {
    notes = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed OpenReview dump: ") + e.what());
  }
  if (!notes.is_array()) throw InputError("OpenReview dump must be a JSON array of notes");

  OpenReviewImport result;
  std::size_t index = 0;
  for (const auto& note : notes) {
    ++index;
    if (!note.is_object()) {
      ++result.skipped;
      continue;
    }
    auto str = [&](const char* key) -> std::string {
      const auto it = note.find(key);
      return it != note.end() && it->is_string() ? it->get<std::string>() : std::string();
    };
    const std::string note_id = str("id").empty() ? "note" + std::to_string(index) : str("id");
    const std::string paper_id = str("forum").empty() ? note_id : str("forum");
    const auto content_it = note.find("content");
    if (content_it == note.end() || !content_it->is_object()) {
      ++result.skipped;
      continue;
    }
    const auto& content = *content_it;

    auto make = [&](Kind kind, std::string text, const std::string& id) {
      Document d;
      d.id = id;
      d.paper_id = paper_id;
      d.kind = kind;
      d.provenance = Provenance::unknown();
      d.venue = venue;
      d.year = year;
      d.text = std::move(text);
      return d;
    };
    std::vector<Document> docs;
    bool usable = false;
    if (auto meta = content_text(content, "metareview")) {
      docs.push_back(make(Kind::MetaReview, *meta, paper_id + ":meta_review:" + note_id));
    } else if (auto decision = content_text(content, "decision")) {
      const auto comment = content_text(content, "comment");
      docs.push_back(make(Kind::MetaReview, comment ? *comment : *decision, paper_id + ":meta_review:" + note_id));
    } else if (auto review = first_of(content, {"review", "comment"})) {
      docs.push_back(make(Kind::Review, *review, paper_id + ":review:" + note_id));
    } else if (auto abstract = content_text(content, "abstract")) {
      if (auto title = content_text(content, "title"); title && !blank(*title))
        docs.push_back(make(Kind::Title, *title, paper_id + ":title"));
      docs.push_back(make(Kind::Abstract, *abstract, paper_id + ":abstract"));
    }
    for (auto& d : docs) {
      if (blank(d.text)) continue;
      if (d.kind != Kind::Title) usable = true;
      const auto* existing = result.corpus.bundle(paper_id);
      const bool slot_taken = existing && ((d.kind == Kind::MetaReview && existing->meta_review) ||
                                           (d.kind == Kind::Abstract && existing->abstract) ||
                                           (d.kind == Kind::Title && existing->title));
      if (slot_taken || result.corpus.find(d.id)) {
        usable = false;
        break;
      }
      result.corpus.add(std::move(d));
    }
    if (!usable) ++result.skipped;
  }
  return result;
}

OpenReviewImport import_openreview_dump(const std::string& path, const std::string& venue, int year) {
  return parse_openreview_dump(read_file(path), venue, year);
}

}  // namespace llmetrica
