#include "llmetrica/http_json.hpp"

#include <thread>

#include "httplib.h"
#include "llmetrica/errors.hpp"

namespace llmetrica {

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path without trailing '/'
};

SplitUrl split_url(const std::string& url) {
  const auto scheme = url.find("://");
  const auto path_start = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  SplitUrl out{url.substr(0, path_start), path_start == std::string::npos ? "" : url.substr(path_start)};
  while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  return out;
}

}  // namespace

nlohmann::json post_json(const HttpEndpoint& endpoint, const std::string& path, const nlohmann::json& body) {
  const auto url = split_url(endpoint.url);
  httplib::Client client(url.origin);
  const auto timeout_s = endpoint.timeout.count() / 1000;
  const auto timeout_us = (endpoint.timeout.count() % 1000) * 1000;
  client.set_connection_timeout(timeout_s, timeout_us);
  client.set_read_timeout(timeout_s, timeout_us);
  client.set_write_timeout(timeout_s, timeout_us);

  const std::string payload = body.dump();
  const std::string target = url.prefix + path;
  auto delay = endpoint.backoff;
  std::string last_error;
  for (int attempt = 0; attempt <= endpoint.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    auto res = client.Post(target, payload, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status >= 400)
      throw ProtocolError(endpoint.url + target + " returned HTTP " + std::to_string(res->status) + ": " +
                          res->body);
    try {
      return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ProtocolError(endpoint.url + target + " returned invalid JSON: " + e.what());
    }
  }
  throw NetworkError(endpoint.url + target + " failed after " + std::to_string(endpoint.retries) +
                     " retries: " + last_error);
}

}  // namespace llmetrica
