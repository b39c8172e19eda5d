#pragma once

// JSON-over-HTTP front end for the operations in api.hpp.
//
//   POST /api/<operation>   JSON body
//   GET  /api/<operation>   query parameters (count, artin, health, ...)
//
// Responses carry the payload as the body, plus X-Request-Id and
// X-Elapsed-Ms headers. Errors are {"code","message"} with a 4xx/5xx status.

#include <memory>
#include <string>

#include "ebwtlab/config.hpp"

namespace ebwtlab {

class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Blocks until stop(). Returns false if the port could not be bound.
  bool listen();
  /// Binds to an ephemeral port on host and returns it (or -1).
  int bind_any_port(const std::string& host = "127.0.0.1");
  /// Serves on a socket from bind_any_port(); blocks until stop().
  bool listen_after_bind();
  void stop();
  bool running() const;

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Impl;
  ServiceConfig config_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ebwtlab
