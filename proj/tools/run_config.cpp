#include "run_config.hpp"

#include "json.hpp"
#include "llmetrica/errors.hpp"
#include "llmetrica/reports.hpp"

namespace llmetrica::cli {

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("config: alpha must lie in (0, 1)");
  if (!(eps > 0.0)) throw InputError("config: eps must be positive");
  if (!(threshold_t > 0.0 && threshold_t <= 1.0)) throw InputError("config: threshold_t must lie in (0, 1]");
  if (long_word <= 0) throw InputError("config: long_word must be positive");
  if (complex_syllables <= 0) throw InputError("config: complex_syllables must be positive");
  if (provider != "lexical" && provider != "remote")
    throw InputError("config: provider must be 'lexical' or 'remote'");
  if (!parse_scheme(scheme)) throw InputError("config: scheme must be 'binary' or 'ternary'");
  if (annotations.empty()) throw InputError("config: annotations must name a source");
  if ((annotations == "sidecar" || provider == "remote") && !sidecar)
    throw InputError("config: the sidecar annotation source and remote provider need --sidecar");
  if (out.empty()) throw InputError("config: out must not be empty");
}

HttpEndpoint RunConfig::endpoint() const {
  if (!sidecar) throw InputError("this command needs --sidecar");
  return HttpEndpoint{*sidecar};
}

Scheme RunConfig::parsed_scheme() const { return *parse_scheme(scheme); }

WordPrefOptions RunConfig::wordpref_options() const {
  WordPrefOptions o;
  o.welch.alpha = alpha;
  o.welch.eps = eps;
  o.welch.mode = standard_se ? StandardErrorMode::Textbook : StandardErrorMode::AsPublished;
  o.long_word_letters = long_word;
  o.complex_syllables = complex_syllables;
  return o;
}

namespace {

template <class T>
T typed(const nlohmann::json& v, const std::string& key, const std::string& path) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(path + ": config key '" + key + "' has the wrong type");
  }
}

}  // namespace

void apply_config_file(RunConfig& c, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw InputError(path + ": config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "corpus") {
      c.corpus = v.is_string() ? std::vector<std::string>{v.get<std::string>()}
                               : typed<std::vector<std::string>>(v, key, path);
    } else if (key == "annotations") {
      c.annotations = typed<std::string>(v, key, path);
    } else if (key == "sidecar") {
      c.sidecar = typed<std::string>(v, key, path);
    } else if (key == "provider") {
      c.provider = typed<std::string>(v, key, path);
    } else if (key == "scheme") {
      c.scheme = typed<std::string>(v, key, path);
    } else if (key == "lexicon") {
      c.lexicon = typed<std::string>(v, key, path);
    } else if (key == "alpha") {
      c.alpha = typed<double>(v, key, path);
    } else if (key == "eps") {
      c.eps = typed<double>(v, key, path);
    } else if (key == "threshold_t") {
      c.threshold_t = typed<double>(v, key, path);
    } else if (key == "long_word") {
      c.long_word = typed<int>(v, key, path);
    } else if (key == "complex_syllables") {
      c.complex_syllables = typed<int>(v, key, path);
    } else if (key == "seed") {
      c.seed = typed<std::uint64_t>(v, key, path);
    } else if (key == "standard_se") {
      c.standard_se = typed<bool>(v, key, path);
    } else if (key == "out") {
      c.out = typed<std::string>(v, key, path);
    } else {
      throw InputError(path + ": unknown config key '" + key + "'");
    }
  }
}

}  // namespace llmetrica::cli
