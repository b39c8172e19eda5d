#pragma once

// Request/response layer shared by the CLI and the HTTP service. Both front
// ends build a JobRequest, call execute(), and serialize the payload with
// dump_payload(), so identical logical requests produce identical bytes.

#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ebwtlab/config.hpp"

namespace ebwtlab::api {

using json = nlohmann::json;

/// Malformed request: missing fields, wrong types, symbols outside the alphabet.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobRequest {
  std::string id;
  std::string operation;
  std::optional<std::string> word;
  std::optional<std::vector<std::string>> parts;
  json params = json::object();  // k, p, n, m, limit, mode, alphabet, ...

  /// Splits a JSON body: "word" (or "l") and "parts" become fields, the rest
  /// stays in params. Throws MalformedInput on wrong types.
  static JobRequest from_json(std::string operation, const json& body, std::string id = {});
};

struct ApiError {
  std::string code;  // bad_request, invalid_argument, guard_exceeded, unknown_operation, cancelled, internal
  std::string message;
};

struct JobResponse {
  std::string id;
  std::optional<json> payload;
  std::optional<ApiError> error;
  double elapsed_ms = 0.0;

  int http_status() const;
  /// The payload, or {"code","message"} for errors.
  json body() const;
};

/// Names accepted by execute().
const std::vector<std::string>& operations();

/// Runs one operation. Never throws; failures come back as ApiError.
/// With dry_run set, stops after validation and guard checks.
JobResponse execute(const JobRequest& request, const Limits& limits, std::stop_token stop = {},
                    bool dry_run = false);

/// Canonical serialization used by both front ends.
std::string dump_payload(const json& body);

/// Human-readable rendering of a payload for the CLI.
std::string format_text(const std::string& operation, const json& payload);

}  // namespace ebwtlab::api
