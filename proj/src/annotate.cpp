#include "llmetrica/annotate.hpp"

#include <algorithm>
#include <filesystem>

#include "llmetrica/conllu.hpp"
#include "llmetrica/errors.hpp"

namespace llmetrica {

AnnotatedDocument annotate_text(const std::string& document_id, const std::string& text) {
  AnnotatedDocument doc;
  doc.document_id = document_id;
  doc.text = text;
  for (const auto& span : split_sentences(text)) {
    Sentence s;
    s.char_span = span;
    s.tokens = tokenize(std::string_view(text).substr(span.first, span.second - span.first));
    if (!s.tokens.empty()) doc.sentences.push_back(std::move(s));
  }
  return doc;
}

AnnotatedDocument annotate_local(const Document& doc) { return annotate_text(doc.id, doc.text); }

AnnotationSet load_conllu_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("annotation directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".conllu") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  AnnotationSet out;
  for (const auto& file : files) {
    for (auto& doc : read_conllu_file(file.string())) {
      if (doc.document_id.empty()) doc.document_id = file.stem().string();
      const auto id = doc.document_id;
      if (!out.emplace(id, std::move(doc)).second)
        throw InputError("document '" + id + "' annotated twice (" + file.string() + ")");
    }
  }
  return out;
}

AnnotationSet annotate_remote(const HttpEndpoint& endpoint, const std::vector<const Document*>& docs,
                              std::size_t batch_size) {
  AnnotationSet out;
  for (std::size_t begin = 0; begin < docs.size(); begin += batch_size) {
    const std::size_t end = std::min(docs.size(), begin + batch_size);
    nlohmann::json texts = nlohmann::json::array();
    for (std::size_t i = begin; i < end; ++i) texts.push_back(docs[i]->text);
    const auto response = post_json(endpoint, "/annotate", {{"texts", texts}});
    const auto it = response.find("conllu");
    if (it == response.end() || !it->is_array() || it->size() != end - begin)
      throw ProtocolError("/annotate: expected 'conllu' array with " + std::to_string(end - begin) + " entries");
    for (std::size_t i = begin; i < end; ++i) {
      const auto& item = (*it)[i - begin];
      if (!item.is_string()) throw ProtocolError("/annotate: CoNLL-U entry is not a string");
      std::vector<AnnotatedDocument> parsed;
      try {
        parsed = parse_conllu(item.get<std::string>(), docs[i]->id, "/annotate[" + docs[i]->id + "]");
      } catch (const ParseError& e) {
        throw ProtocolError(e.what());
      }
      if (parsed.size() != 1)
        throw ProtocolError("/annotate: expected one document for '" + docs[i]->id + "', got " +
                            std::to_string(parsed.size()));
      parsed.front().document_id = docs[i]->id;
      out.emplace(docs[i]->id, std::move(parsed.front()));
    }
  }
  return out;
}

}  // namespace llmetrica
