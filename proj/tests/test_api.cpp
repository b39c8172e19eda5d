#include "doctest.h"

#include <stdexcept>
#include <string>

#include "ebwtlab/api.hpp"
#include "ebwtlab/config.hpp"

using namespace ebwtlab;
using api::json;

namespace {

api::JobResponse run(const std::string& op, const json& body, const Limits& limits = {}) {
  return api::execute(api::JobRequest::from_json(op, body, "req-1"), limits);
}

}  // namespace

TEST_CASE("ebwt payload") {
  const auto r = run("ebwt", {{"parts", {"baa", "bab"}}});
  REQUIRE_FALSE(r.error);
  CHECK(api::dump_payload(*r.payload) == R"({"l":"bababa","runs":5})");
  CHECK(r.http_status() == 200);
  CHECK(r.id == "req-1");
  CHECK(api::format_text("ebwt", *r.payload) == "bababa\n");
}

TEST_CASE("count travels as a decimal string") {
  CHECK(run("count", {{"n", 6}, {"k", 1}}).payload->dump() == R"({"count":"5"})");
  // query-string form
  CHECK(run("count", {{"n", "6"}, {"k", "1"}}).payload->dump() == R"({"count":"5"})");
  const auto big = run("count", {{"n", 500}, {"k", 1}});
  CHECK(big.payload->at("count").get<std::string>().size() > 20);
}

TEST_CASE("apply reports admissibility per part") {
  const auto r = run("apply", {{"word", "aabb"}, {"parts_lengths", {2, 2}}, {"k", 1}});
  REQUIRE_FALSE(r.error);
  CHECK(r.payload->at("admissible") == true);
  CHECK(r.payload->at("l") == "aabb");
  CHECK(r.payload->at("runs") == 1);
  const auto bad = run("apply", {{"word", "aabb"}, {"parts_lengths", {1, 3}}, {"k", 1}});
  CHECK(bad.payload->at("admissible") == false);
  CHECK(bad.payload->at("part_admissible") == json::array({false, true}));
  CHECK(run("apply", {{"word", "aabb"}, {"parts_lengths", {1, 1}}}).error->code == "invalid_argument");
}

TEST_CASE("invert accepts l") {
  const auto r = run("invert", {{"l", "bababa"}});
  CHECK(r.payload->at("parts") == json::array({"aab", "abb"}));
}

TEST_CASE("search payload") {
  const auto r = run("search", {{"word", "baabab"}, {"k", 2}});
  REQUIRE_FALSE(r.error);
  CHECK(r.payload->at("min_rho") == 3);
  CHECK(r.payload->at("max_witness") == "3+3");
  CHECK(r.payload->at("count_explored") == "2");
}

TEST_CASE("errors carry distinct codes and statuses") {
  const auto malformed = run("ebwt", {{"parts", {"baa", ""}}});
  CHECK(malformed.error->code == "bad_request");
  CHECK(malformed.http_status() == 400);
  CHECK(malformed.body().contains("message"));

  Limits small;
  small.search_limit = 10;
  const auto guarded = run("search", {{"word", std::string(40, 'a')}, {"k", 1}}, small);
  CHECK(guarded.error->code == "guard_exceeded");
  CHECK(guarded.http_status() == 413);

  const auto capped = run("runs", {{"word", std::string(5000, 'a')}}, Limits::service_defaults());
  CHECK(capped.error->code == "guard_exceeded");

  const auto unknown = run("frobnicate", json::object());
  CHECK(unknown.error->code == "unknown_operation");
  CHECK(unknown.http_status() == 404);

  CHECK(run("count", {{"n", 1}, {"k", 1}}).error->code == "invalid_argument");
  CHECK(run("count", {{"n", -3}, {"k", 1}}).error->code == "bad_request");
  CHECK(run("count", {{"k", 1}}).error->code == "bad_request");
  CHECK(run("ebwt", {{"parts", {"abc"}}, {"alphabet", "ab"}}).error->code == "bad_request");
  CHECK(run("search", {{"word", "abab"}, {"k", 1}, {"limit", "3000000"}}).error->code == "guard_exceeded");
  CHECK_THROWS_AS(api::JobRequest::from_json("ebwt", json::array()), api::MalformedInput);
  CHECK_THROWS_AS(api::JobRequest::from_json("ebwt", {{"parts", "baa"}}), api::MalformedInput);
}

TEST_CASE("dry run validates without computing") {
  const auto r = api::execute(api::JobRequest::from_json("search", {{"word", "baabab"}, {"k", 2}}), {}, {}, true);
  CHECK_FALSE(r.error);
  CHECK_FALSE(r.payload);
}

TEST_CASE("cycles serialize rationals") {
  const auto r = run("cycles", {{"n", 5}, {"k", 2}});
  const auto& i = r.payload->at("systems").at(0).at("i");
  CHECK(i.at(0) == "11/3");
  CHECK(r.payload->at("systems").at(0).at("feasible") == false);
}

TEST_CASE("family, artin and circulant payloads") {
  const auto f = run("family", {{"k", 2}, {"ratio", 2}});
  CHECK(f.payload->at("n") == 21);
  CHECK(f.payload->at("rho") == 41);
  CHECK(f.payload->at("ratio_lower_bound") == "41/18");
  CHECK(run("artin", {{"limit", 12}}).payload->dump() == R"({"values":[2,4,10,12]})");
  CHECK(run("circulant", {{"k", 5}}).payload->at("ok") == true);
  CHECK(run("health", json::object()).payload->at("status") == "ok");
}

TEST_CASE("every listed operation is reachable") {
  for (const auto& op : api::operations()) {
    const auto r = run(op, json::object());
    if (r.error) CHECK(r.error->code != "unknown_operation");
  }
}

TEST_CASE("config text") {
  ServiceConfig c;
  apply_config_text(c, "# limits\nport = 9090\nword_cap=100 # small\nhost=127.0.0.1\nsearch_limit = 5000\n");
  CHECK(c.port == 9090);
  CHECK(c.host == "127.0.0.1");
  CHECK(c.limits.word_cap == 100);
  CHECK(c.limits.search_limit == 5000);
  CHECK_THROWS_AS(apply_config_text(c, "colour = blue\n"), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_text(c, "port 80\n"), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_text(c, "word_cap = -1\n"), std::invalid_argument);
  CHECK(default_port(1234) > 0);
}
