#include "ebwtlab/service.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "httplib.h"

#include "ebwtlab/api.hpp"

namespace ebwtlab {

namespace {

using api::json;

std::string elapsed_text(double ms) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << ms;
  return out.str();
}

void write_response(httplib::Response& res, const api::JobResponse& job) {
  res.status = job.http_status();
  if (!job.id.empty()) res.set_header("X-Request-Id", job.id);
  res.set_header("X-Elapsed-Ms", elapsed_text(job.elapsed_ms));
  res.set_content(api::dump_payload(job.body()), "application/json");
}

api::JobResponse bad_request(std::string id, std::string message) {
  api::JobResponse r;
  r.id = std::move(id);
  r.error = api::ApiError{"bad_request", std::move(message)};
  return r;
}

// GET parameters arrive as strings; numeric fields accept decimal strings.
json query_to_json(const httplib::Request& req) {
  json body = json::object();
  for (const auto& [key, value] : req.params) {
    if (key == "parts") {
      json parts = json::array();
      std::stringstream in(value);
      for (std::string piece; std::getline(in, piece, ',');) parts.push_back(piece);
      body[key] = parts;
    } else {
      body[key] = value;
    }
  }
  return body;
}

// Long searches run on a worker thread; the response is streamed so that a
// closed client connection can be noticed and the search stopped.
struct StreamedJob {
  std::atomic<bool> done{false};
  api::JobResponse response;
  std::jthread worker;
};

}  // namespace

struct Service::Impl {
  httplib::Server server;
};

Service::Service(ServiceConfig config) : config_(std::move(config)), impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;
  server.set_payload_max_length(std::size_t{1} << 20);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type, X-Request-Id"},
                              {"Access-Control-Expose-Headers", "X-Request-Id, X-Elapsed-Ms"}});

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  const Limits limits = config_.limits;
  const auto handle = [limits](const httplib::Request& req, httplib::Response& res, json body) {
    const std::string operation = req.matches[1];
    const std::string header_id = req.get_header_value("X-Request-Id");
    api::JobRequest job;
    try {
      job = api::JobRequest::from_json(operation, body, header_id);
    } catch (const std::exception& e) {
      write_response(res, bad_request(header_id, e.what()));
      return;
    }

    if (operation != "search") {
      write_response(res, api::execute(job, limits));
      return;
    }

    auto precheck = api::execute(job, limits, {}, true);
    if (precheck.error) {
      write_response(res, precheck);
      return;
    }
    auto state = std::make_shared<StreamedJob>();
    state->worker = std::jthread([raw = state.get(), job, limits](std::stop_token stop) {
      raw->response = api::execute(job, limits, stop);
      raw->done.store(true, std::memory_order_release);
    });
    if (!job.id.empty()) res.set_header("X-Request-Id", job.id);
    res.set_chunked_content_provider(
        "application/json",
        [state](std::size_t, httplib::DataSink& sink) {
          if (state->done.load(std::memory_order_acquire)) {
            const auto text = api::dump_payload(state->response.body());
            sink.write(text.data(), text.size());
            sink.done();
            return true;
          }
          if (!sink.is_writable()) {
            state->worker.request_stop();
            return false;
          }
          std::this_thread::sleep_for(std::chrono::milliseconds(5));
          return true;
        },
        [state](bool) { state->worker.request_stop(); });
  };

  server.Post(R"(/api/([a-z_]+))", [handle](const httplib::Request& req, httplib::Response& res) {
    json body;
    if (!req.body.empty()) {
      try {
        body = json::parse(req.body);
      } catch (const json::parse_error& e) {
        write_response(res, bad_request(req.get_header_value("X-Request-Id"), std::string("invalid JSON: ") + e.what()));
        return;
      }
    }
    handle(req, res, std::move(body));
  });

  server.Get(R"(/api/([a-z_]+))", [handle](const httplib::Request& req, httplib::Response& res) {
    handle(req, res, query_to_json(req));
  });
}

Service::~Service() { stop(); }

bool Service::listen() { return impl_->server.listen(config_.host, config_.port); }

int Service::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

bool Service::running() const { return impl_->server.is_running(); }

}  // namespace ebwtlab
