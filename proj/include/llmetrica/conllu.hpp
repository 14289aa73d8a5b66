#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "llmetrica/text.hpp"

namespace llmetrica {

/// Parses CoNLL-U text. Documents start at `# newdoc id = <id>`; if the input
/// has no newdoc marker at all, everything becomes one document named
/// `default_id`. Multiword ranges ("3-4") and empty nodes ("3.1") are
/// skipped. A HEAD of "_" means the token is unparsed; any other
/// non-integer HEAD is an error. `source` labels error messages.
std::vector<AnnotatedDocument> parse_conllu(std::string_view text,
                                            const std::string& default_id = "",
                                            const std::string& source = "<conllu>");

std::vector<AnnotatedDocument> read_conllu_file(const std::string& path);

/// Serializes documents to CoNLL-U (newdoc id, text comment, 10 columns).
std::string to_conllu(const std::vector<AnnotatedDocument>& docs);
std::string to_conllu(const AnnotatedDocument& doc);

}  // namespace llmetrica
