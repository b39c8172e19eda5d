#include "doctest.h"

#include <chrono>
#include <string>
#include <thread>

#include "httplib.h"

#include "ebwtlab/api.hpp"
#include "ebwtlab/service.hpp"

using namespace ebwtlab;
using api::json;

namespace {

struct RunningService {
  Service service;
  int port = -1;
  std::thread thread;

  explicit RunningService(ServiceConfig config = {}) : service(std::move(config)) {
    port = service.bind_any_port("127.0.0.1");
    REQUIRE(port > 0);
    thread = std::thread([this] { service.listen_after_bind(); });
    for (int i = 0; i < 200 && !service.running(); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  ~RunningService() {
    service.stop();
    thread.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_read_timeout(30, 0);
    return c;
  }
};

}  // namespace

TEST_CASE("service answers the shared operations") {
  RunningService rs;
  auto c = rs.client();

  auto r = c.Post("/api/ebwt", R"({"parts":["baa","bab"]})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->body == R"({"l":"bababa","runs":5})");
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(r->has_header("X-Elapsed-Ms"));

  r = c.Get("/api/count?n=6&k=1");
  REQUIRE(r);
  CHECK(r->body == R"({"count":"5"})");

  r = c.Post("/api/apply", R"({"word":"aabb","parts_lengths":[2,2],"k":1})", "application/json");
  REQUIRE(r);
  CHECK(json::parse(r->body).at("admissible") == true);

  r = c.Get("/api/ebwt?parts=baa,bab");
  REQUIRE(r);
  CHECK(r->body == R"({"l":"bababa","runs":5})");

  httplib::Headers h{{"X-Request-Id", "abc-7"}};
  r = c.Post("/api/invert", h, R"({"l":"bababa"})", "application/json");
  REQUIRE(r);
  CHECK(r->get_header_value("X-Request-Id") == "abc-7");
  CHECK(json::parse(r->body).at("parts") == json::array({"aab", "abb"}));
}

TEST_CASE("service and library produce identical bytes") {
  RunningService rs;
  auto c = rs.client();
  for (const auto& [op, body] : std::vector<std::pair<std::string, json>>{
           {"ebwt", {{"parts", {"baa", "bab"}}}},
           {"search", {{"word", "baabab"}, {"k", 2}}},
           {"family", {{"k", 2}, {"ratio", 2}}},
           {"cycles", {{"n", 7}, {"k", 3}}},
           {"preimage", {{"n", 9}}}}) {
    const auto direct = api::execute(api::JobRequest::from_json(op, body), Limits::service_defaults());
    const auto r = c.Post("/api/" + op, body.dump(), "application/json");
    REQUIRE(r);
    CHECK(r->body == api::dump_payload(direct.body()));
    // stateless: the same request twice gives the same body
    const auto again = c.Post("/api/" + op, body.dump(), "application/json");
    CHECK(again->body == r->body);
  }
}

TEST_CASE("service errors") {
  ServiceConfig config;
  config.limits.search_limit = 100;
  RunningService rs(config);
  auto c = rs.client();

  auto r = c.Post("/api/search", R"({"word":"abababababababababababababab","k":1})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 413);
  CHECK(json::parse(r->body).at("code") == "guard_exceeded");

  r = c.Post("/api/ebwt", "{not json", "application/json");
  REQUIRE(r);
  CHECK(r->status == 400);
  CHECK(json::parse(r->body).at("code") == "bad_request");

  r = c.Post("/api/ebwt", R"({"parts":["baa",""]})", "application/json");
  CHECK(r->status == 400);

  r = c.Post("/api/nosuchthing", "{}", "application/json");
  CHECK(r->status == 404);

  r = c.Get("/api/count?n=1&k=1");
  CHECK(r->status == 422);

  r = c.Options("/api/ebwt");
  REQUIRE(r);
  CHECK(r->status == 204);
  CHECK(r->has_header("Access-Control-Allow-Methods"));
}

TEST_CASE("service word cap") {
  RunningService rs;
  auto c = rs.client();
  const json body{{"word", std::string(5000, 'a')}};
  const auto r = c.Post("/api/runs", body.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 413);
}
