#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "llmetrica/annotate.hpp"
#include "llmetrica/conllu.hpp"
#include "llmetrica/errors.hpp"

using namespace llmetrica;

namespace {

const char* kTwoDocs =
    "# newdoc id = a\n"
    "# text = It works.\n"
    "1\tIt\tit\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tworks\twork\tVERB\t_\t_\t0\troot\t_\tSpaceAfter=No\n"
    "3\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
    "\n"
    "# newdoc id = b\n"
    "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "1\tdo\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
    "2\tn't\tnot\tPART\t_\t_\t3\tadvmod\t_\t_\n"
    "3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n"
    "3.1\tgone\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "\n";

}  // namespace

TEST_CASE("parses documents, skipping multiword and empty-node lines") {
  const auto docs = parse_conllu(kTwoDocs);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].document_id == "a");
  CHECK(docs[0].has_syntax);
  REQUIRE(docs[0].sentences.size() == 1);
  CHECK(docs[0].sentences[0].tokens.size() == 3);
  CHECK(docs[0].sentences[0].tokens[1].deprel == "root");
  CHECK(docs[0].sentences[0].tokens[1].head == 0);
  CHECK(docs[0].text == "It works.");
  CHECK(docs[1].sentences[0].tokens.size() == 3);
  CHECK(docs[1].text == "do n't go");
}

TEST_CASE("malformed lines report their line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse_conllu(text, "d", "f.conllu");
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("1\tA\t_\tNOUN\t_\t_\t0\troot\t_\n") == 1);                                       // 9 columns
  CHECK(line_of("1\tA\t_\tNOUN\t_\t_\t0\troot\t_\t_\n3\tB\t_\tNOUN\t_\t_\t1\tdep\t_\t_\n") == 2);  // id gap
  CHECK(line_of("1\tA\t_\tNOUN\t_\t_\tx\troot\t_\t_\n") == 1);                                     // bad head
  CHECK(line_of("1\tA\t_\tNOUN\t_\t_\t0\troot\t_\t_\n\n# newdoc id = z\n1\tB\t_\tX\t_\t_\t0\troot\t_\t_\n") == 3);  // newdoc after untagged content
}

TEST_CASE("tokens without syntax mark the document as syntax-free") {
  const auto docs = parse_conllu("1\tA\t_\t_\t_\t_\t_\t_\t_\t_\n", "solo");
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].document_id == "solo");
  CHECK_FALSE(docs[0].has_syntax);
}

TEST_CASE("round trip through the writer preserves annotations") {
  std::mt19937_64 rng(3);
  std::vector<fixtures::GenDocument> gen;
  for (int i = 0; i < 20; ++i) gen.push_back(fixtures::random_document(rng, "doc" + std::to_string(i)));
  const auto parsed = parse_conllu(fixtures::conllu_of(gen));
  REQUIRE(parsed.size() == gen.size());
  const auto again = parse_conllu(to_conllu(parsed));
  CHECK(again == parsed);
  for (std::size_t i = 0; i < gen.size(); ++i) {
    CHECK(parsed[i].document_id == gen[i].id);
    CHECK(parsed[i].sentences.size() == gen[i].sentences.size());
  }
}

TEST_CASE("local annotation has sentences but no syntax") {
  const auto doc = annotate_text("x", "First one here. Second one!");
  CHECK(doc.sentences.size() == 2);
  CHECK_FALSE(doc.has_syntax);
  CHECK(doc.sentence_text(1) == "Second one!");
}
