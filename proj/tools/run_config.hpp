#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "llmetrica/detect.hpp"
#include "llmetrica/http_json.hpp"
#include "llmetrica/wordpref.hpp"

namespace llmetrica::cli {

/// Settings shared by every subcommand. Loaded from a flat JSON file, then
/// overridden by flags.
struct RunConfig {
  std::vector<std::string> corpus;
  std::string annotations = "local";  // "local", "sidecar", or a CoNLL-U directory
  std::optional<std::string> sidecar;
  std::string provider = "lexical";  // "lexical" or "remote"
  std::string scheme = "binary";
  std::optional<std::string> lexicon;
  double alpha = 0.05;
  double eps = 1.0;
  double threshold_t = 0.5;
  int long_word = 10;
  int complex_syllables = 3;
  std::uint64_t seed = 0;
  bool standard_se = false;
  std::string out = "out";

  /// Throws InputError naming the offending key.
  void validate() const;

  HttpEndpoint endpoint() const;
  Scheme parsed_scheme() const;
  WordPrefOptions wordpref_options() const;
};

/// Applies the keys of a JSON config file onto `config`. Unknown keys are errors.
void apply_config_file(RunConfig& config, const std::string& path);

}  // namespace llmetrica::cli
