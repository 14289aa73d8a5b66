#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "fake_sidecar.hpp"
#include "fixtures.hpp"
#include "llmetrica/reports.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(LLMETRICA_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Workspace {
  std::string dir;
  std::string corpus;
  std::string conllu_dir;
};

Workspace stage(const fixtures::PairedCorpus& fx, const std::string& prefix) {
  Workspace w;
  w.dir = fixtures::make_temp_dir(prefix);
  w.corpus = w.dir + "/corpus.jsonl";
  w.conllu_dir = w.dir + "/conllu";
  llmetrica::write_jsonl(fx.corpus, w.corpus);
  llmetrica::write_text_file(w.conllu_dir + "/all.conllu", fixtures::conllu_of(fx.docs));
  return w;
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(llmetrica::read_text_file(path));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("exit codes") {
  const auto w = stage(fixtures::delta_corpus(10), "cli_exit");
  CHECK(run("--help") == 0);
  CHECK(run("metrics --corpus " + w.corpus + " --out " + w.dir + "/o") == 0);
  CHECK(fs::exists(w.dir + "/o/metrics.csv"));
  CHECK(run("metrics --corpus " + w.dir + "/missing.jsonl --out " + w.dir + "/o") == 1);
  CHECK(run("metrics --corpus " + w.corpus + " --bogus") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("evaluate --corpus " + w.corpus) == 1);
  CHECK(run("metrics --corpus " + w.corpus + " --alpha 2 --out " + w.dir + "/o") == 1);
  CHECK(run("detect --corpus " + w.corpus + " --sidecar http://127.0.0.1:1 --out " + w.dir + "/o") == 2);

  fixtures::FakeSidecar fake;
  fake.classify_mode = fixtures::FakeSidecar::ClassifyMode::BadSum;
  CHECK(run("detect --corpus " + w.corpus + " --sidecar " + fake.url() + " --out " + w.dir + "/o") == 2);
}

TEST_CASE("wordpref flags the planted units") {
  const auto w = stage(fixtures::delta_corpus(), "cli_wordpref");
  REQUIRE(run("wordpref --corpus " + w.corpus + " --annotations " + w.conllu_dir + " --out " + w.dir + "/o") == 0);
  const auto rows = read_csv_rows(w.dir + "/o/wordpref.csv");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "1");
  CHECK(rows[1][1] == "delta");
  CHECK(rows[1][2] == "NOUN");
  CHECK(rows[2][1] == "comprehensive");
  CHECK(run("wordpref --corpus " + w.corpus + " --out " + w.dir + "/o2") == 1);  // local annotations lack POS
}

TEST_CASE("compare reports the long-word directions") {
  const auto w = stage(fixtures::long_word_corpus(), "cli_compare");
  REQUIRE(run("compare --corpus " + w.corpus + " --out " + w.dir + "/o") == 0);
  std::map<std::string, std::string> dir;
  for (const auto& r : read_csv_rows(w.dir + "/o/direction.csv"))
    if (r.size() == 6 && r[0] == "abstract") dir[r[1]] = r[2];
  CHECK(dir["AWL"] == "↑");
  CHECK(dir["LWR"] == "↑");
  CHECK(dir["SWR"] == "↓");
  CHECK(dir["FRE"] == "↓");
}

TEST_CASE("ingest merges several corpus files") {
  const auto w = stage(fixtures::delta_corpus(5), "cli_ingest");
  const std::string reviews = w.dir + "/reviews.jsonl";
  llmetrica::write_jsonl(fixtures::review_corpus(2), reviews);
  REQUIRE(run("ingest --corpus " + w.corpus + " --corpus " + reviews + " --out " + w.dir + "/o") == 0);
  const auto merged = llmetrica::load_jsonl(w.dir + "/o/corpus.jsonl");
  CHECK(merged.size() == 10 + fixtures::review_corpus(2).size());
  CHECK(run("ingest --corpus " + w.corpus + " --corpus " + w.corpus + " --out " + w.dir + "/o2") == 1);
}
