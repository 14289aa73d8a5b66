#pragma once

#include <map>
#include <string>
#include <vector>

#include "llmetrica/corpus.hpp"
#include "llmetrica/http_json.hpp"
#include "llmetrica/text.hpp"

namespace llmetrica {

/// Tokenizes and sentence-splits a document without syntax (has_syntax = false).
AnnotatedDocument annotate_local(const Document& doc);
AnnotatedDocument annotate_text(const std::string& document_id, const std::string& text);

/// Annotations keyed by document id.
using AnnotationSet = std::map<std::string, AnnotatedDocument>;

/// Reads every *.conllu file of a directory (sorted by name). Duplicate
/// document ids across files are an error.
AnnotationSet load_conllu_dir(const std::string& dir);

/// Calls the sidecar's POST /annotate for the given documents (batches of
/// `batch_size`) and parses each returned CoNLL-U document.
AnnotationSet annotate_remote(const HttpEndpoint& endpoint, const std::vector<const Document*>& docs,
                              std::size_t batch_size = 32);

}  // namespace llmetrica
