#include "doctest.h"
#include "llmetrica/corpus.hpp"
#include "llmetrica/errors.hpp"

using namespace llmetrica;

namespace {

const char* kCorpus =
    R"({"id":"p1:t","paper_id":"p1","kind":"title","provenance":"human","venue":"ICLR","year":2023,"text":"A title"})"
    "\n"
    R"({"id":"p1:a","paper_id":"p1","kind":"abstract","provenance":"human","venue":"ICLR","year":2023,"text":"An abstract."})"
    "\n\n"
    R"({"id":"p1:a:g","paper_id":"p1","kind":"abstract","provenance":"llm_refined","model":"gpt4o","venue":"ICLR","year":2023,"text":"A refined abstract."})"
    "\n"
    R"({"id":"p1:r1","paper_id":"p1","kind":"review","provenance":"human","venue":"ICLR","year":2023,"text":"Good."})"
    "\n"
    R"({"id":"p1:mr","paper_id":"p1","kind":"meta_review","provenance":"human","venue":"ICLR","year":2023,"text":"Accept."})"
    "\n"
    R"({"id":"p1:mr:g","paper_id":"p1","kind":"meta_review","provenance":"llm_synthesized","model":"gemini","venue":"ICLR","year":2023,"text":"Accept it."})"
    "\n"
    R"({"id":"p2:a","paper_id":"p2","kind":"abstract","provenance":"unknown","venue":"NeurIPS","year":2024,"text":"Other."})"
    "\n";

}  // namespace

TEST_CASE("JSONL corpus builds bundles and indexes") {
  const auto c = parse_jsonl(kCorpus);
  CHECK(c.size() == 7);
  CHECK(c.paper_ids() == std::vector<std::string>{"p1", "p2"});
  const auto* b = c.bundle("p1");
  REQUIRE(b);
  CHECK(b->title->id == "p1:t");
  CHECK(b->abstract->id == "p1:a");
  CHECK(b->reviews.size() == 1);
  CHECK(b->meta_review->id == "p1:mr");
  CHECK(c.at("p1:a:g").provenance.label() == "llm_refined:gpt4o");

  const auto swapped = c.bundle_with(c.at("p1:mr:g"));
  CHECK(swapped.meta_review->id == "p1:mr:g");
  CHECK(swapped.reviews.size() == 1);

  CHECK(c.select({std::nullopt, std::nullopt, Kind::Abstract, std::nullopt}).size() == 3);
  CHECK(c.select({2024, std::nullopt, std::nullopt, std::nullopt}) == std::vector<std::string>{"p2:a"});
  CHECK(c.select({std::nullopt, std::nullopt, std::nullopt, Provenance::refined("gpt4o")}) ==
        std::vector<std::string>{"p1:a:g"});
  CHECK(c.indexes() == Corpus::build_indexes(c.documents()));
}

TEST_CASE("JSONL writer round-trips") {
  const auto c = parse_jsonl(kCorpus);
  const auto text = to_jsonl(c);
  const auto again = parse_jsonl(text);
  CHECK(again.documents() == c.documents());
  CHECK(to_jsonl(again) == text);
}

TEST_CASE("invalid records fail with their line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_jsonl(text, "c.jsonl");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string ok = R"({"id":"a","paper_id":"p","kind":"title","provenance":"human","venue":"v","year":1,"text":"t"})";
  CHECK(line_of(ok + "\n{not json\n") == 2);
  CHECK(line_of(ok + "\n" + ok + "\n") == 2);  // duplicate id
  CHECK(line_of(R"({"id":"b","paper_id":"p","kind":"essay","provenance":"human","venue":"v","year":1,"text":"t"})") == 1);
  CHECK(line_of(R"({"id":"b","paper_id":"p","kind":"title","provenance":"llm_refined","venue":"v","year":1,"text":"t"})") == 1);
  CHECK(line_of(R"({"id":"b","paper_id":"p","kind":"title","provenance":"human","model":"x","venue":"v","year":1,"text":"t"})") == 1);
  CHECK(line_of(R"({"id":"b","paper_id":"p","kind":"title","provenance":"human","venue":"v","year":1,"text":"  "})") == 1);
  CHECK(line_of(R"({"id":"b","paper_id":"p","kind":"title","provenance":"human","venue":"v","year":"x","text":"t"})") == 1);
  CHECK(line_of(ok + "\n") == 0);
}

TEST_CASE("a second human document for the same slot is rejected") {
  Corpus c;
  Document d{"a", "p", Kind::Abstract, Provenance::human(), "v", 2020, "text"};
  c.add(d);
  d.id = "b";
  CHECK_THROWS_AS(c.add(d), InputError);
  d.kind = Kind::Review;
  CHECK_NOTHROW(c.add(d));
  d.id = "c";
  CHECK_NOTHROW(c.add(d));  // reviews are a list
}

TEST_CASE("OpenReview dump import") {
  const char* dump = R"([
    {"id":"f1","forum":"f1","content":{"title":{"value":"Paper"},"abstract":{"value":"We study things."}}},
    {"id":"n1","forum":"f1","invitation":"ICLR.cc/2024/Conference/Submission1/-/Official_Review",
     "content":{"review":{"value":"Solid work."}}},
    {"id":"n2","forum":"f1","invitation":"ICLR.cc/2024/Conference/Submission1/-/Meta_Review",
     "content":{"metareview":"Accept."}},
    {"id":"n3","forum":"f1","invitation":"ICLR.cc/2024/Conference/Submission1/-/Official_Review",
     "content":{"review":{"value":"  "}}}
  ])";
  const auto imported = parse_openreview_dump(dump, "ICLR", 2024);
  CHECK(imported.corpus.size() == 4);
  CHECK(imported.skipped >= 1);
  const auto* b = imported.corpus.bundle("f1");
  REQUIRE(b);
  CHECK(b->abstract);
  CHECK(b->reviews.size() == 1);
  CHECK(b->meta_review);
  for (const auto& d : imported.corpus.documents()) {
    CHECK(d.provenance.source == Provenance::Source::Unknown);
    CHECK(d.year == 2024);
  }
  CHECK_THROWS_AS(parse_openreview_dump("{", "v", 1), InputError);
}
