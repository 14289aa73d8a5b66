#include "llmetrica/conllu.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "llmetrica/errors.hpp"

namespace llmetrica {

namespace {

constexpr std::string_view kNewdoc = "# newdoc";
constexpr std::string_view kText = "# text =";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::string> field(std::string_view s) {
  if (s == "_") return std::nullopt;
  return std::string(s);
}

struct PendingSentence {
  std::vector<Token> tokens;
  std::optional<std::string> text;
};

class Builder {
 public:
  explicit Builder(std::string default_id) { current_.document_id = std::move(default_id); }

  void start_document(std::string id) {
    finish_document();
    current_ = AnnotatedDocument{};
    current_.document_id = std::move(id);
    open_ = true;
  }

  void add_sentence(PendingSentence&& s) {
    if (s.tokens.empty()) return;
    std::string sentence_text;
    if (s.text) {
      sentence_text = *s.text;
    } else {
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        sentence_text += s.tokens[i].form;
        const bool no_space = s.tokens[i].misc.find("SpaceAfter=No") != std::string::npos;
        if (i + 1 < s.tokens.size() && !no_space) sentence_text += ' ';
      }
    }
    if (!current_.text.empty()) current_.text += ' ';
    Sentence out;
    out.char_span.first = current_.text.size();
    current_.text += sentence_text;
    out.char_span.second = current_.text.size();
    out.tokens = std::move(s.tokens);
    current_.sentences.push_back(std::move(out));
    open_ = true;
  }

  bool has_content() const { return !current_.sentences.empty(); }

  std::vector<AnnotatedDocument> finish() {
    finish_document();
    return std::move(docs_);
  }

 private:
  void finish_document() {
    if (!open_) return;
    bool syntax = !current_.sentences.empty();
    for (const auto& s : current_.sentences)
      for (const auto& t : s.tokens) syntax = syntax && t.has_syntax();
    current_.has_syntax = syntax;
    docs_.push_back(std::move(current_));
    current_ = AnnotatedDocument{};
    open_ = false;
  }

  AnnotatedDocument current_;
  bool open_ = false;
  std::vector<AnnotatedDocument> docs_;
};

}  // namespace

std::vector<AnnotatedDocument> parse_conllu(std::string_view text, const std::string& default_id,
                                            const std::string& source) {
  Builder builder(default_id);
  PendingSentence sentence;
  bool saw_newdoc = false;
  bool content_before_newdoc = false;
  std::size_t line_no = 0;

  auto flush_sentence = [&] {
    if (!sentence.tokens.empty()) {
      if (!saw_newdoc) content_before_newdoc = true;
      builder.add_sentence(std::move(sentence));
    }
    sentence = PendingSentence{};
  };

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (trim(line).empty()) {
      flush_sentence();
      continue;
    }
    if (line.front() == '#') {
      if (line.substr(0, kNewdoc.size()) == kNewdoc) {
        flush_sentence();
        auto rest = trim(line.substr(kNewdoc.size()));
        std::string id;
        if (rest.substr(0, 2) == "id") {
          rest = trim(rest.substr(2));
          if (!rest.empty() && rest.front() == '=') id = std::string(trim(rest.substr(1)));
        }
        if (content_before_newdoc || (id.empty() && saw_newdoc))
          throw ParseError(source, line_no, "missing newdoc id when multiple documents are present");
        if (id.empty()) throw ParseError(source, line_no, "newdoc without id");
        saw_newdoc = true;
        builder.start_document(std::move(id));
      } else if (line.substr(0, kText.size()) == kText) {
        sentence.text = std::string(trim(line.substr(kText.size())));
      }
      continue;
    }

    std::string_view cols[10];
    std::size_t n = 0, pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      if (n < 10) cols[n] = line.substr(pos, tab == std::string_view::npos ? tab : tab - pos);
      ++n;
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (n != 10)
      throw ParseError(source, line_no, "expected 10 tab-separated columns, got " + std::to_string(n));

    const auto id = cols[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) continue;
    const auto index = parse_int(id);
    if (!index || *index < 1) throw ParseError(source, line_no, "invalid token ID '" + std::string(id) + "'");
    if (*index != static_cast<int>(sentence.tokens.size()) + 1)
      throw ParseError(source, line_no, "token ID " + std::string(id) + " out of sequence");

    Token tok = make_token(std::string(cols[1]));
    tok.lemma = std::string(cols[2]);
    tok.upos = field(cols[3]);
    tok.xpos = std::string(cols[4]);
    tok.feats = std::string(cols[5]);
    if (cols[6] != "_") {
      tok.head = parse_int(cols[6]);
      if (!tok.head || *tok.head < 0)
        throw ParseError(source, line_no, "non-integer HEAD '" + std::string(cols[6]) + "'");
    }
    tok.deprel = field(cols[7]);
    tok.deps = std::string(cols[8]);
    tok.misc = std::string(cols[9]);
    sentence.tokens.push_back(std::move(tok));
  }
  flush_sentence();
  return builder.finish();
}

std::vector<AnnotatedDocument> read_conllu_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open CoNLL-U file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_conllu(buf.str(), "", path);
}

std::string to_conllu(const AnnotatedDocument& doc) {
  std::string out = "# newdoc id = " + doc.document_id + "\n";
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    const auto text = doc.sentence_text(s);
    if (!text.empty() && text.find('\n') == std::string_view::npos) {
      out += "# text = ";
      out += text;
      out += '\n';
    }
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const auto& t = sentence.tokens[i];
      out += std::to_string(i + 1);
      for (const std::string* col : {&t.form, &t.lemma}) out += '\t' + *col;
      out += '\t' + t.upos.value_or("_");
      out += '\t' + t.xpos;
      out += '\t' + t.feats;
      out += '\t' + (t.head ? std::to_string(*t.head) : std::string("_"));
      out += '\t' + t.deprel.value_or("_");
      out += '\t' + t.deps;
      out += '\t' + t.misc;
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string to_conllu(const std::vector<AnnotatedDocument>& docs) {
  std::string out;
  for (const auto& d : docs) out += to_conllu(d);
  return out;
}

}  // namespace llmetrica
