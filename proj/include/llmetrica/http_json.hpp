#pragma once

#include <chrono>
#include <string>

#include "json.hpp"

namespace llmetrica {

/// A JSON-over-HTTP service such as the NLP sidecar.
struct HttpEndpoint {
  std::string url;  // e.g. "http://127.0.0.1:8765" (an optional path prefix is kept)
  int retries = 3;  // extra attempts after the first, on connection errors and 5xx
  std::chrono::milliseconds backoff{200};  // doubled after each failed attempt
  std::chrono::milliseconds timeout{30000};
};

/// POSTs `body` to `path`. Transport failures and 5xx are retried; when
/// retries are exhausted a NetworkError is thrown. 4xx responses and
/// non-JSON bodies raise ProtocolError.
nlohmann::json post_json(const HttpEndpoint& endpoint, const std::string& path, const nlohmann::json& body);

}  // namespace llmetrica
