// llmetrica command-line front end. Each subcommand fronts one analysis
// module, writes its reports into --out and prints a one-line summary.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "llmetrica/annotate.hpp"
#include "llmetrica/conllu.hpp"
#include "llmetrica/corpus.hpp"
#include "llmetrica/detect.hpp"
#include "llmetrica/errors.hpp"
#include "llmetrica/evaluation.hpp"
#include "llmetrica/lexicons.hpp"
#include "llmetrica/lingmetrics.hpp"
#include "llmetrica/patterns.hpp"
#include "llmetrica/reports.hpp"
#include "llmetrica/semmetrics.hpp"
#include "llmetrica/similarity.hpp"
#include "llmetrica/split.hpp"
#include "llmetrica/trend.hpp"
#include "llmetrica/wordpref.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;
using namespace llmetrica;
using llmetrica::cli::RunConfig;

namespace {

std::string out_path(const RunConfig& c, const std::string& name) { return (fs::path(c.out) / name).string(); }

Corpus load_corpus(const RunConfig& c) {
  if (c.corpus.empty()) throw InputError("no corpus given (--corpus)");
  if (c.corpus.size() == 1) return load_jsonl(c.corpus.front());
  Corpus merged;
  for (const auto& path : c.corpus) {
    const Corpus part = load_jsonl(path);
    for (const auto& d : part.documents()) merged.add(d);
  }
  return merged;
}

std::optional<Kind> kind_filter(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto k = parse_kind(s);
  if (!k) throw InputError("unknown kind '" + s + "'");
  return k;
}

std::vector<const Document*> select_docs(const Corpus& corpus, std::optional<Kind> kind) {
  std::vector<const Document*> docs;
  for (const auto& d : corpus.documents())
    if (!kind || d.kind == *kind) docs.push_back(&d);
  if (docs.empty()) throw InputError("no documents selected");
  return docs;
}

/// Resolves annotations from the configured source, in `docs` order.
std::vector<AnnotatedDocument> annotations_for(const RunConfig& c, const std::vector<const Document*>& docs) {
  std::vector<AnnotatedDocument> out;
  out.reserve(docs.size());
  if (c.annotations == "local") {
    for (const auto* d : docs) out.push_back(annotate_local(*d));
    return out;
  }
  const AnnotationSet set = c.annotations == "sidecar" ? annotate_remote(c.endpoint(), docs)
                                                       : load_conllu_dir(c.annotations);
  for (const auto* d : docs) {
    const auto it = set.find(d->id);
    if (it == set.end()) throw InputError("no annotation for document '" + d->id + "' in " + c.annotations);
    out.push_back(it->second);
  }
  return out;
}

void require_pos(const RunConfig& c, const char* command) {
  if (c.annotations == "local")
    throw InputError(std::string(command) + " needs POS tags: use a CoNLL-U directory or the sidecar for --annotations");
}

std::unique_ptr<SentimentLexicon> load_lexicon(const RunConfig& c) {
  if (!c.lexicon) return nullptr;
  return std::make_unique<SentimentLexicon>(SentimentLexicon::parse(read_text_file(*c.lexicon), *c.lexicon));
}

std::vector<MetricVector> compute_metrics(const RunConfig& c, const std::vector<const Document*>& docs) {
  const auto lexicon = load_lexicon(c);
  MetricOptions options{c.long_word, lexicon.get()};
  std::vector<MetricVector> vectors;
  for (const auto& a : annotations_for(c, docs)) vectors.push_back(metric_vector(a, options));
  return vectors;
}

std::unique_ptr<SimilarityProvider> make_provider(const RunConfig& c) {
  if (c.provider == "remote") return std::make_unique<RemoteProvider>(c.endpoint());
  return std::make_unique<LexicalProvider>();
}

std::vector<Prediction> load_predictions_for(const std::string& path, const Corpus& corpus) {
  auto preds = load_predictions(path);
  for (const auto& p : preds)
    if (!corpus.find(p.document_id))
      throw InputError(path + ": prediction for unknown document '" + p.document_id + "'");
  return preds;
}

/// Human/LLM pairs of one kind. With a model, only that model's documents
/// count; otherwise one model is drawn per paper from the seed.
std::vector<std::pair<const Document*, const Document*>> paired_docs(const Corpus& corpus, Kind kind,
                                                                      const std::string& model,
                                                                      std::uint64_t seed) {
  const auto strategy = model.empty() ? PairingStrategy::mixed() : PairingStrategy::single(model);
  SplitManifest manifest;
  manifest.kind = kind;
  manifest.seed = seed;
  manifest.strategy = strategy;
  std::set<std::string> has_human, has_llm;
  for (const auto& d : corpus.documents()) {
    if (d.kind != kind) continue;
    if (d.provenance.source == Provenance::Source::Human) has_human.insert(d.paper_id);
    if (d.provenance.is_llm() && (model.empty() || d.provenance.model == model)) has_llm.insert(d.paper_id);
  }
  std::set_intersection(has_human.begin(), has_human.end(), has_llm.begin(), has_llm.end(),
                        std::inserter(manifest.train_paper_ids, manifest.train_paper_ids.end()));
  if (manifest.train_paper_ids.empty())
    throw InputError("no paper has both a human and an LLM " + std::string(to_string(kind)));

  const auto items = build_training_pairs(corpus, manifest, strategy);
  std::vector<std::pair<const Document*, const Document*>> pairs;
  for (std::size_t i = 0; i + 1 < items.size(); i += 2)
    pairs.emplace_back(&corpus.at(items[i].document.id), &corpus.at(items[i + 1].document.id));
  return pairs;
}

// --- subcommands -----------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> openreview;
  std::string venue;
  int year = 0;
};

std::string cmd_ingest(const RunConfig& c, const IngestArgs& a) {
  if (c.corpus.empty() && a.openreview.empty()) throw InputError("ingest needs --corpus or --openreview");
  Corpus corpus = c.corpus.empty() ? Corpus() : load_corpus(c);
  std::size_t skipped = 0;
  for (const auto& path : a.openreview) {
    if (a.venue.empty() || a.year == 0) throw InputError("--openreview needs --venue and --year");
    auto imported = import_openreview_dump(path, a.venue, a.year);
    skipped += imported.skipped;
    for (const auto& d : imported.corpus.documents()) corpus.add(d);
  }
  if (corpus.empty()) throw InputError("ingest: no documents");
  write_jsonl(corpus, out_path(c, "corpus.jsonl"));
  return "ingest: " + std::to_string(corpus.size()) + " documents from " + std::to_string(corpus.paper_ids().size()) +
         " papers (" + std::to_string(skipped) + " notes skipped) -> " + out_path(c, "corpus.jsonl");
}

std::string cmd_annotate(const RunConfig& c, const std::string& kind) {
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  const auto annotated = annotations_for(c, docs);
  write_text_file(out_path(c, "annotations.conllu"), to_conllu(annotated));
  std::size_t sentences = 0;
  for (const auto& a : annotated) sentences += a.sentences.size();
  return "annotate: " + std::to_string(annotated.size()) + " documents, " + std::to_string(sentences) +
         " sentences -> " + out_path(c, "annotations.conllu");
}

std::string cmd_metrics(const RunConfig& c, const std::string& kind) {
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  const auto vectors = compute_metrics(c, docs);
  write_text_file(out_path(c, "metrics.csv"), metrics_csv(docs, vectors));
  return "metrics: " + std::to_string(docs.size()) + " documents -> " + out_path(c, "metrics.csv");
}


std::string cmd_semantic(const RunConfig& c, bool variants) {
  const Corpus corpus = load_corpus(c);
  const auto provider = make_provider(c);
  const EmbeddingSimilarity sim(*provider);

  std::vector<SemanticRow> rows;
  std::size_t with_mrsim = 0, with_rsim = 0;
  auto add = [&](const PaperBundle& bundle, const std::string& variant, const std::string& provenance) {
    if (!bundle.meta_review && bundle.reviews.empty()) return;
    SemanticRow row{bundle.paper_id, variant, provenance, semantic_report(bundle, sim, c.threshold_t)};
    with_mrsim += row.report.mrsim ? 1 : 0;
    with_rsim += row.report.rsim ? 1 : 0;
    rows.push_back(std::move(row));
  };
  for (const auto& [paper_id, bundle] : corpus.bundles()) {
    add(bundle, "-", bundle.meta_review ? bundle.meta_review->provenance.label() : "human");
    if (!variants) continue;
    std::vector<const Document*> llm;
    for (const auto* d : corpus.documents_of(paper_id))
      if (d->provenance.is_llm() && (d->kind == Kind::Review || d->kind == Kind::MetaReview)) llm.push_back(d);
    std::sort(llm.begin(), llm.end(), [](const Document* a, const Document* b) { return a->id < b->id; });
    for (const auto* d : llm) add(corpus.bundle_with(*d), d->id, d->provenance.label());
  }
  if (rows.empty()) throw InputError("semantic: no paper has reviews or a meta-review");
  write_text_file(out_path(c, "semantic.csv"), semantic_csv(rows));
  write_text_file(out_path(c, "semantic_reviews.csv"), semantic_reviews_csv(rows, corpus));
  return "semantic: " + std::to_string(rows.size()) + " bundles (" + std::to_string(with_mrsim) + " with MRSim, " +
         std::to_string(with_rsim) + " with RSim, provider " + provider->name() + ") -> " +
         out_path(c, "semantic.csv");
}

std::string cmd_compare(const RunConfig& c, const std::string& kind) {
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  const auto vectors = compute_metrics(c, docs);

  struct Groups {
    std::vector<MetricVector> human;
    std::map<std::string, std::vector<MetricVector>> llm;
  };
  std::map<Kind, Groups> by_kind;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& p = docs[i]->provenance;
    auto& g = by_kind[docs[i]->kind];
    if (p.source == Provenance::Source::Human) g.human.push_back(vectors[i]);
    else if (p.is_llm()) g.llm[p.label()].push_back(vectors[i]);
  }
  std::vector<DirectionSection> sections;
  for (const auto& [k, g] : by_kind)
    if (!g.human.empty() && !g.llm.empty()) sections.push_back({k, direction_table(g.human, g.llm)});
  if (sections.empty()) throw InputError("compare: no kind has both human and LLM documents");
  write_text_file(out_path(c, "direction.csv"), direction_csv(sections));

  std::string summary = "compare:";
  for (const auto& s : sections) {
    summary += " " + std::string(to_string(s.kind)) + "[";
    bool first = true;
    for (const auto& row : s.table.rows) {
      summary += (first ? "" : " ") + std::string(metric_name(row.metric)) + std::string(direction_symbol(row.direction));
      first = false;
    }
    summary += "]";
  }
  return summary + " -> " + out_path(c, "direction.csv");
}

struct WordPrefArgs {
  std::string kind = "abstract";
  std::string model;
};

std::string cmd_wordpref(const RunConfig& c, const WordPrefArgs& a) {
  require_pos(c, "wordpref");
  const Corpus corpus = load_corpus(c);
  const Kind kind = *kind_filter(a.kind);
  const auto doc_pairs = paired_docs(corpus, kind, a.model, c.seed);

  std::vector<const Document*> docs;
  for (const auto& [h, l] : doc_pairs) {
    docs.push_back(h);
    docs.push_back(l);
  }
  const auto annotated = annotations_for(c, docs);
  std::vector<AnnotatedPair> pairs;
  for (std::size_t i = 0; i < annotated.size(); i += 2) pairs.push_back({&annotated[i], &annotated[i + 1]});

  const auto options = c.wordpref_options();
  const auto stats = word_statistics(pairs, options);
  auto set = preferred_words(pairs, options);
  set.kind = std::string(to_string(kind));
  set.model = a.model.empty() ? "mixed" : a.model;

  write_text_file(out_path(c, "wordstats.csv"), wordstats_csv(stats));
  write_text_file(out_path(c, "wordpref.csv"), wordpref_csv(set));
  std::string summary = "wordpref: " + std::to_string(pairs.size()) + " pairs, " + std::to_string(stats.size()) +
                        " units, " + std::to_string(set.entries.size()) + " preferred";
  if (!set.entries.empty())
    summary += ", top " + set.entries.front().unit.word + "/" + set.entries.front().unit.pos + " (WUIR " +
               format_real(set.entries.front().wuir) + ")";
  return summary + " -> " + out_path(c, "wordpref.csv");
}

/// Reads the (word, pos) columns of a wordpref.csv.
std::vector<WordUnit> read_word_set(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::string line;
  std::vector<WordUnit> units;
  std::size_t line_no = 0;
  std::size_t word_col = 0, pos_col = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (line_no == 1) {
      const auto w = std::find(fields.begin(), fields.end(), "word");
      const auto p = std::find(fields.begin(), fields.end(), "pos");
      if (w == fields.end() || p == fields.end()) throw ParseError(path, 1, "header lacks word/pos columns");
      word_col = static_cast<std::size_t>(w - fields.begin());
      pos_col = static_cast<std::size_t>(p - fields.begin());
      continue;
    }
    if (fields.size() <= std::max(word_col, pos_col)) throw ParseError(path, line_no, "short row");
    units.push_back({fields[word_col], fields[pos_col]});
  }
  return units;
}

std::string cmd_coverage(const RunConfig& c, const std::string& kind, const std::string& wordset) {
  require_pos(c, "coverage");
  if (wordset.empty()) throw InputError("coverage needs --wordset (a wordpref.csv)");
  const auto units = read_word_set(wordset);
  if (units.empty()) throw InputError(wordset + ": empty word set");
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  const auto annotated = annotations_for(c, docs);

  CsvWriter csv({"id", "kind", "provenance", "venue", "year", "coverage"});
  std::map<std::string, std::pair<double, std::size_t>> by_provenance;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const double cov = set_coverage(annotated[i], units);
    const auto& d = *docs[i];
    csv.row({d.id, std::string(to_string(d.kind)), d.provenance.label(), d.venue, std::to_string(d.year),
             format_real(cov)});
    auto& acc = by_provenance[d.provenance.label()];
    acc.first += cov;
    ++acc.second;
  }
  write_text_file(out_path(c, "coverage.csv"), csv.str());
  std::string summary = "coverage: " + std::to_string(units.size()) + " units over " + std::to_string(docs.size()) +
                        " documents; mean";
  for (const auto& [label, acc] : by_provenance)
    summary += " " + label + "=" + format_real(acc.first / static_cast<double>(acc.second));
  return summary + " -> " + out_path(c, "coverage.csv");
}

std::string cmd_patterns(const RunConfig& c, const std::string& kind) {
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  const auto annotated = annotations_for(c, docs);

  std::vector<PatternCounts> counts;
  std::map<std::string, std::vector<PatternCounts>> groups;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    counts.push_back(count_patterns(annotated[i]));
    groups[std::string(to_string(docs[i]->kind)) + "/" + docs[i]->provenance.label()].push_back(counts.back());
  }
  std::vector<PatternGroup> group_list;
  for (auto& [name, g] : groups) group_list.push_back({name, std::move(g)});
  write_text_file(out_path(c, "pattern_counts.csv"), pattern_counts_csv(counts));
  write_text_file(out_path(c, "patterns.csv"), patterns_csv(group_list));
  return "patterns: " + std::to_string(docs.size()) + " documents in " + std::to_string(group_list.size()) +
         " groups -> " + out_path(c, "patterns.csv");
}

std::string cmd_detect(const RunConfig& c, const std::string& kind, const std::string& model_id) {
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  ClassifyOptions options;
  if (!model_id.empty()) options.model_id = model_id;
  const auto preds = classify(docs, c.endpoint(), c.parsed_scheme(), options);
  write_text_file(out_path(c, "predictions.jsonl"), predictions_to_jsonl(preds));
  const auto llm = std::count_if(preds.begin(), preds.end(), [](const Prediction& p) { return is_llm_label(p.label); });
  return "detect: " + std::to_string(preds.size()) + " predictions (" + std::to_string(llm) + " LLM) -> " +
         out_path(c, "predictions.jsonl");
}

std::string cmd_evaluate(const RunConfig& c, const std::string& predictions) {
  if (predictions.empty()) throw InputError("evaluate needs --predictions");
  const Corpus corpus = load_corpus(c);
  const auto preds = load_predictions_for(predictions, corpus);
  if (preds.empty()) throw InputError(predictions + ": no predictions");

  std::vector<const Document*> docs;
  for (const auto& p : preds) docs.push_back(&corpus.at(p.document_id));
  const auto report = penetration(preds, docs);
  write_text_file(out_path(c, "penetration.csv"), penetration_csv(report));

  std::string summary = "evaluate: " + std::to_string(preds.size()) + " predictions, " +
                        std::to_string(report.rows.size()) + " penetration groups";
  const bool any_gold = std::any_of(docs.begin(), docs.end(), [](const Document* d) {
    return d->provenance.source != Provenance::Source::Unknown;
  });
  if (any_gold) {
    const auto table = round_reals(evaluation_table(preds, corpus));
    write_text_file(out_path(c, "evaluation.json"), table.dump(2) + "\n");
    summary += ", weighted F1 avg " + format_real(table["avg"].get<double>());
  } else {
    summary += ", no gold labels";
  }
  return summary + " -> " + c.out;
}

std::vector<GroupKey> parse_group_keys(const std::string& spec) {
  std::vector<GroupKey> keys;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    const auto k = parse_group_key(part);
    if (!k) throw InputError("unknown group key '" + part + "' (use year, venue, kind, provenance)");
    keys.push_back(*k);
  }
  return keys;
}

std::string cmd_trend(const RunConfig& c, const std::string& kind, const std::string& group_by,
                      const std::string& predictions) {
  const Corpus corpus = load_corpus(c);
  const auto docs = select_docs(corpus, kind_filter(kind));
  const auto vectors = compute_metrics(c, docs);
  std::map<std::string, bool> predicted;
  if (!predictions.empty())
    for (const auto& p : load_predictions_for(predictions, corpus)) predicted[p.document_id] = is_llm_label(p.label);

  std::vector<std::string> columns;
  for (Metric m : kAllMetrics) columns.emplace_back(metric_name(m));
  std::vector<TrendRecord> records;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& d = *docs[i];
    TrendRecord r{d.year, d.venue, std::string(to_string(d.kind)), d.provenance.label(), {}, std::nullopt};
    for (Metric m : kAllMetrics) r.values.push_back(vectors[i].get(m));
    if (const auto it = predicted.find(d.id); it != predicted.end()) r.predicted_llm = it->second;
    records.push_back(std::move(r));
  }
  const auto keys = parse_group_keys(group_by);
  const auto report = trend(records, columns, keys);
  write_text_file(out_path(c, "trend.csv"), trend_csv(report));
  std::string summary = "trend: " + std::to_string(report.rows.size()) + " groups over " +
                        std::to_string(records.size()) + " documents";
  if (std::find(keys.begin(), keys.end(), GroupKey::Year) != keys.end()) {
    write_text_file(out_path(c, "trend_plot.json"), round_reals(trend_plot_json(report)).dump(2) + "\n");
    summary += " (+ plot data)";
  }
  return summary + " -> " + out_path(c, "trend.csv");
}

struct SplitArgs {
  std::string kind = "abstract";
  std::string ratio = "7:3";
  std::string model;
  bool pairs = false;
};

SplitRatio parse_ratio(const std::string& s) {
  unsigned a = 0, b = 0;
  char colon = 0;
  std::istringstream in(s);
  if (!(in >> a >> colon >> b) || colon != ':' || a == 0 || b == 0 || !in.eof())
    throw InputError("ratio must look like 7:3");
  return {a, b};
}

std::string cmd_split(const RunConfig& c, const SplitArgs& a) {
  const Corpus corpus = load_corpus(c);
  const Kind kind = *kind_filter(a.kind);
  const auto strategy = a.model.empty() ? PairingStrategy::mixed() : PairingStrategy::single(a.model);
  const auto manifest = split_paired(corpus, kind, parse_ratio(a.ratio), c.seed, strategy);
  const std::string name = "split_" + std::string(to_string(kind)) + ".json";
  write_text_file(out_path(c, name), manifest_to_json(manifest));
  std::string summary = "split: " + std::to_string(manifest.train_paper_ids.size() + manifest.test_paper_ids.size()) +
                        " papers -> train " + std::to_string(manifest.train_paper_ids.size()) + " / test " +
                        std::to_string(manifest.test_paper_ids.size());
  if (a.pairs) {
    std::string lines;
    for (const auto& item : build_training_pairs(corpus, manifest, strategy)) {
      nlohmann::ordered_json j;
      j["document_id"] = item.document.id;
      j["paper_id"] = item.document.paper_id;
      j["label"] = item.label == PairLabel::Human ? "human" : "llm";
      j["provenance"] = item.document.provenance.label();
      lines += j.dump() + "\n";
    }
    write_text_file(out_path(c, "train_pairs.jsonl"), lines);
    summary += " (+ training pairs)";
  }
  return summary + " -> " + out_path(c, name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"llmetrica: linguistic, semantic and detector-based analysis of LLM use in scholarly text"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with flat RunConfig keys; flags override it");
  auto* o_corpus = app.add_option("--corpus", flags.corpus, "corpus JSONL file(s)");
  auto* o_ann = app.add_option("--annotations", flags.annotations, "local | sidecar | CoNLL-U directory");
  std::string sidecar;
  auto* o_sidecar = app.add_option("--sidecar", sidecar, "NLP sidecar base URL");
  auto* o_provider =
      app.add_option("--provider", flags.provider, "similarity provider")->check(CLI::IsMember({"lexical", "remote"}));
  auto* o_scheme =
      app.add_option("--scheme", flags.scheme, "detector label scheme")->check(CLI::IsMember({"binary", "ternary"}));
  std::string lexicon;
  auto* o_lexicon = app.add_option("--lexicon", lexicon, "sentiment lexicon TSV (word, polarity, subjectivity)");
  auto* o_alpha = app.add_option("--alpha", flags.alpha, "significance level");
  auto* o_eps = app.add_option("--eps", flags.eps, "smoothing constant");
  auto* o_t = app.add_option("--threshold-t", flags.threshold_t, "SF-IRF similarity threshold");
  auto* o_long = app.add_option("--long-word", flags.long_word, "letters for a long word");
  auto* o_complex = app.add_option("--complex-syllables", flags.complex_syllables, "syllables for a complex word");
  auto* o_seed = app.add_option("--seed", flags.seed, "random seed");
  auto* o_se = app.add_flag("--standard-se", flags.standard_se, "textbook Welch standard error");
  auto* o_out = app.add_option("--out", flags.out, "output directory");

  std::string kind, predictions, model_id, wordset, group_by = "year,venue,kind";
  bool variants = true;
  IngestArgs ingest;
  WordPrefArgs wordpref;
  SplitArgs split;

  auto* s_ingest = app.add_subcommand("ingest", "validate corpora and import OpenReview dumps into one JSONL");
  s_ingest->add_option("--openreview", ingest.openreview, "OpenReview dump (JSON array of notes)");
  s_ingest->add_option("--venue", ingest.venue, "venue for imported notes");
  s_ingest->add_option("--year", ingest.year, "year for imported notes");
  auto* s_annotate = app.add_subcommand("annotate", "write the resolved annotations as CoNLL-U");
  s_annotate->add_option("--kind", kind, "only this document kind");
  auto* s_metrics = app.add_subcommand("metrics", "the ten linguistic metrics per document");
  s_metrics->add_option("--kind", kind, "only this document kind");
  auto* s_semantic = app.add_subcommand("semantic", "MRSim, RSim and SF-IRF specificity per paper");
  s_semantic->add_flag("!--no-variants", variants, "skip bundles with LLM reviews substituted in");
  auto* s_compare = app.add_subcommand("compare", "human vs LLM direction table per document kind");
  s_compare->add_option("--kind", kind, "only this document kind");
  auto* s_wordpref = app.add_subcommand("wordpref", "LLM-preferred (word, POS) units by Welch test");
  s_wordpref->add_option("--kind", wordpref.kind, "document kind")->capture_default_str();
  s_wordpref->add_option("--model", wordpref.model, "pair with this model only (default: mixed)");
  auto* s_coverage = app.add_subcommand("coverage", "share of a preferred word set present per document");
  s_coverage->add_option("--wordset", wordset, "wordpref.csv to measure")->required();
  s_coverage->add_option("--kind", kind, "only this document kind");
  auto* s_patterns = app.add_subcommand("patterns", "personability, interactivity, attention-to-detail FP/FI");
  s_patterns->add_option("--kind", kind, "only this document kind");
  auto* s_detect = app.add_subcommand("detect", "classify documents through the sidecar");
  s_detect->add_option("--kind", kind, "only this document kind");
  s_detect->add_option("--model-id", model_id, "sidecar model to use");
  auto* s_evaluate = app.add_subcommand("evaluate", "F1 against provenance and penetration rates");
  s_evaluate->add_option("--predictions", predictions, "predictions JSONL")->required();
  auto* s_trend = app.add_subcommand("trend", "metric means and penetration per group");
  s_trend->add_option("--kind", kind, "only this document kind");
  s_trend->add_option("--group-by", group_by, "comma-separated keys")->capture_default_str();
  s_trend->add_option("--predictions", predictions, "predictions JSONL for penetration rates");
  auto* s_split = app.add_subcommand("split", "seeded paired train/test split");
  s_split->add_option("--kind", split.kind, "document kind")->capture_default_str();
  s_split->add_option("--ratio", split.ratio, "train:test")->capture_default_str();
  s_split->add_option("--model", split.model, "single-LLM pairing with this model");
  s_split->add_flag("--pairs", split.pairs, "also write the training pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) cli::apply_config_file(config, config_path);
    if (o_corpus->count()) config.corpus = flags.corpus;
    if (o_ann->count()) config.annotations = flags.annotations;
    if (o_sidecar->count()) config.sidecar = sidecar;
    if (o_provider->count()) config.provider = flags.provider;
    if (o_scheme->count()) config.scheme = flags.scheme;
    if (o_lexicon->count()) config.lexicon = lexicon;
    if (o_alpha->count()) config.alpha = flags.alpha;
    if (o_eps->count()) config.eps = flags.eps;
    if (o_t->count()) config.threshold_t = flags.threshold_t;
    if (o_long->count()) config.long_word = flags.long_word;
    if (o_complex->count()) config.complex_syllables = flags.complex_syllables;
    if (o_seed->count()) config.seed = flags.seed;
    if (o_se->count()) config.standard_se = flags.standard_se;
    if (o_out->count()) config.out = flags.out;
    config.validate();

    std::string summary;
    if (s_ingest->parsed()) summary = cmd_ingest(config, ingest);
    else if (s_annotate->parsed()) summary = cmd_annotate(config, kind);
    else if (s_metrics->parsed()) summary = cmd_metrics(config, kind);
    else if (s_semantic->parsed()) summary = cmd_semantic(config, variants);
    else if (s_compare->parsed()) summary = cmd_compare(config, kind);
    else if (s_wordpref->parsed()) summary = cmd_wordpref(config, wordpref);
    else if (s_coverage->parsed()) summary = cmd_coverage(config, kind, wordset);
    else if (s_patterns->parsed()) summary = cmd_patterns(config, kind);
    else if (s_detect->parsed()) summary = cmd_detect(config, kind, model_id);
    else if (s_evaluate->parsed()) summary = cmd_evaluate(config, predictions);
    else if (s_trend->parsed()) summary = cmd_trend(config, kind, group_by, predictions);
    else if (s_split->parsed()) summary = cmd_split(config, split);
    std::cout << summary << '\n';
    return 0;
  } catch (const ProtocolError& e) {
    std::cerr << "llmetrica: protocol error: " << e.what() << '\n';
    return 2;
  } catch (const NetworkError& e) {
    std::cerr << "llmetrica: network error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "llmetrica: " << e.what() << '\n';
    return 1;
  }
}
