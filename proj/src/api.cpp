#include "ebwtlab/api.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "ebwtlab/adversary.hpp"
#include "ebwtlab/decomposition.hpp"
#include "ebwtlab/errors.hpp"
#include "ebwtlab/suites.hpp"
#include "ebwtlab/transform.hpp"
#include "ebwtlab/word.hpp"

namespace ebwtlab::api {

JobRequest JobRequest::from_json(std::string operation, const json& body, std::string id) {
  JobRequest req;
  req.operation = std::move(operation);
  req.id = std::move(id);
  if (body.is_null()) return req;
  if (!body.is_object()) throw MalformedInput("request body must be a JSON object");
  for (const auto& [key, value] : body.items()) {
    if (key == "word" || key == "l") {
      if (!value.is_string()) throw MalformedInput("\"" + key + "\" must be a string");
      req.word = value.get<std::string>();
    } else if (key == "parts") {
      if (!value.is_array()) throw MalformedInput("\"parts\" must be an array of strings");
      std::vector<std::string> parts;
      for (const auto& p : value) {
        if (!p.is_string()) throw MalformedInput("\"parts\" must be an array of strings");
        parts.push_back(p.get<std::string>());
      }
      req.parts = std::move(parts);
    } else if (key == "id") {
      if (value.is_string()) req.id = value.get<std::string>();
    } else {
      req.params[key] = value;
    }
  }
  return req;
}

int JobResponse::http_status() const {
  if (!error) return 200;
  const auto& c = error->code;
  if (c == "bad_request") return 400;
  if (c == "unknown_operation") return 404;
  if (c == "guard_exceeded") return 413;
  if (c == "invalid_argument") return 422;
  if (c == "cancelled") return 503;
  return 500;
}

json JobResponse::body() const {
  if (error) return json{{"code", error->code}, {"message", error->message}};
  return payload ? *payload : json::object();
}

std::string dump_payload(const json& body) { return body.dump(); }

namespace {

struct Context {
  const JobRequest& req;
  const Limits& limits;
  std::stop_token stop;
  bool dry_run;
  std::optional<Alphabet> alphabet;
};

void check_cap(std::size_t length, std::size_t cap, const std::string& what) {
  if (cap != 0 && length > cap) {
    throw GuardExceeded(what + " has length " + std::to_string(length) + ", above the cap of " + std::to_string(cap));
  }
}

const json* find_param(const Context& ctx, const std::string& key) {
  const auto it = ctx.req.params.find(key);
  return it == ctx.req.params.end() || it->is_null() ? nullptr : &*it;
}

std::uint64_t to_unsigned(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw MalformedInput("\"" + key + "\" must be non-negative");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    std::size_t used = 0;
    try {
      if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        const auto value = std::stoull(s, &used);
        if (used == s.size()) return value;
      }
    } catch (const std::out_of_range&) {
      throw GuardExceeded("\"" + key + "\" is out of range");
    }
  }
  throw MalformedInput("\"" + key + "\" must be a non-negative integer");
}

std::uint64_t uint_param(const Context& ctx, const std::string& key, std::optional<std::uint64_t> fallback = {}) {
  if (const json* v = find_param(ctx, key)) return to_unsigned(*v, key);
  if (fallback) return *fallback;
  throw MalformedInput("missing parameter \"" + key + "\"");
}

std::uint64_t uint_param_any(const Context& ctx, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    if (find_param(ctx, key)) return uint_param(ctx, key);
  }
  throw MalformedInput("missing parameter \"" + std::string(*keys.begin()) + "\"");
}

std::size_t size_param(const Context& ctx, const std::string& key, std::optional<std::uint64_t> fallback = {}) {
  return static_cast<std::size_t>(uint_param(ctx, key, fallback));
}

BigInt bigint_param(const Context& ctx, const std::string& key, const BigInt& fallback) {
  const json* v = find_param(ctx, key);
  if (!v) return fallback;
  if (v->is_string()) {
    const auto s = v->get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedInput("\"" + key + "\" must be a non-negative integer");
    }
    return BigInt(s);
  }
  return BigInt(to_unsigned(*v, key));
}

Word validated(const Context& ctx, const std::string& text, const std::string& what) {
  if (text.empty()) throw MalformedInput(what + " must be non-empty");
  Word w(text);
  if (ctx.alphabet) {
    try {
      ctx.alphabet->validate(w);
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what());
    }
  }
  return w;
}

Word word_param(const Context& ctx, std::size_t cap, const std::string& what = "word") {
  if (!ctx.req.word) throw MalformedInput("missing \"" + what + "\"");
  check_cap(ctx.req.word->size(), cap, what);
  return validated(ctx, *ctx.req.word, what);
}

Decomposition parts_param(const Context& ctx) {
  if (!ctx.req.parts || ctx.req.parts->empty()) throw MalformedInput("missing \"parts\"");
  std::size_t total = 0;
  for (const auto& p : *ctx.req.parts) total += p.size();
  check_cap(total, ctx.limits.word_cap, "parts");
  std::vector<Word> parts;
  for (const auto& p : *ctx.req.parts) parts.push_back(validated(ctx, p, "each part"));
  return Decomposition(std::move(parts));
}

json words_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& p : d.parts()) out.push_back(p.str());
  return out;
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

using Handler = std::function<json(const Context&)>;

json op_ebwt(const Context& ctx) {
  const auto d = parts_param(ctx);
  const auto r = ebwt(d);
  return {{"l", r.l_column.str()}, {"runs", r.runs()}};
}

json op_bwt(const Context& ctx) {
  const auto l = bwt(word_param(ctx, ctx.limits.word_cap));
  return {{"l", l.str()}, {"runs", runs(l)}};
}

json op_invert(const Context& ctx) {
  return {{"parts", words_json(invert_ebwt(word_param(ctx, ctx.limits.word_cap, "l")))}};
}

json op_runs(const Context& ctx) { return {{"runs", runs(word_param(ctx, ctx.limits.word_cap))}}; }

json op_rotations(const Context& ctx) {
  json out = json::array();
  for (const auto& r : rotations(word_param(ctx, ctx.limits.word_cap))) out.push_back(r.str());
  return {{"rotations", out}};
}

json op_root(const Context& ctx) {
  const auto re = root_exp(word_param(ctx, ctx.limits.word_cap));
  return {{"root", re.root.str()}, {"exponent", re.exponent}};
}

json op_compare(const Context& ctx) {
  const auto d = parts_param(ctx);
  if (d.size() != 2) throw MalformedInput("compare needs exactly two parts");
  const auto order = omega_compare(d.parts()[0], d.parts()[1]);
  return {{"order", order < 0 ? "less" : order > 0 ? "greater" : "equal"}};
}

json op_matrix(const Context& ctx) {
  json rows = json::array();
  for (const auto& row : ebwt_matrix(parts_param(ctx))) {
    rows.push_back({{"rotation", row.rotation.str()}, {"last", std::string(1, static_cast<char>(row.last))}});
  }
  return {{"rows", rows}};
}

json op_apply(const Context& ctx) {
  const Word w = word_param(ctx, ctx.limits.word_cap);
  const json* lengths = find_param(ctx, "parts_lengths");
  if (!lengths || !lengths->is_array() || lengths->empty()) {
    throw MalformedInput("\"parts_lengths\" must be a non-empty array of positive integers");
  }
  const std::size_t k = size_param(ctx, "k", 0);
  Composition c;
  c.min_part = k + 1;
  for (const auto& v : *lengths) {
    const auto len = to_unsigned(v, "parts_lengths");
    if (len == 0) throw MalformedInput("\"parts_lengths\" entries must be positive");
    c.parts.push_back(static_cast<std::size_t>(len));
  }
  const auto d = apply_composition(w, c);
  const auto r = ebwt(d);
  json per_part = json::array();
  for (auto len : c.parts) per_part.push_back(len > k);
  return {{"parts", words_json(d)},
          {"l", r.l_column.str()},
          {"runs", r.runs()},
          {"admissible", c.admissible()},
          {"part_admissible", per_part}};
}

json op_count(const Context& ctx) {
  const std::size_t n = size_param(ctx, "n");
  const std::size_t k = size_param(ctx, "k");
  check_cap(n, ctx.limits.count_n_cap, "n");
  return {{"count", count_decompositions(n, k).str()}};
}

json op_enumerate(const Context& ctx) {
  const std::size_t n = size_param(ctx, "n");
  const std::size_t k = size_param(ctx, "k");
  check_cap(n, ctx.limits.count_n_cap, "n");
  const BigInt count = n >= k + 1 ? count_decompositions(n, k) : BigInt(0);
  if (count > ctx.limits.enumerate_limit) {
    throw GuardExceeded(count.str() + " compositions exceed the enumeration limit of " +
                        std::to_string(ctx.limits.enumerate_limit));
  }
  if (ctx.dry_run) return nullptr;
  json list = json::array();
  CompositionStream stream(n, k);
  Composition c;
  while (stream.next(c)) list.push_back(c.to_string());
  return {{"count", count.str()}, {"compositions", list}};
}

json op_fib(const Context& ctx) {
  const std::size_t c = size_param(ctx, "c");
  const std::size_t n = size_param(ctx, "n");
  check_cap(n, ctx.limits.count_n_cap, "n");
  return {{"value", generalized_fibonacci(c, n).str()}};
}

json op_growth(const Context& ctx) { return {{"rate", growth_rate(size_param(ctx, "k"))}}; }

json op_search(const Context& ctx) {
  const Word w = word_param(ctx, ctx.limits.search_word_cap);
  const std::size_t k = size_param(ctx, "k");
  SearchOptions options;
  options.limit = bigint_param(ctx, "limit", ctx.limits.search_limit);
  if (options.limit > ctx.limits.search_limit) {
    throw GuardExceeded("requested limit " + options.limit.str() + " is above the configured maximum of " +
                        ctx.limits.search_limit.str());
  }
  const BigInt count = count_decompositions(w.size(), k);
  if (count > options.limit) {
    throw GuardExceeded("search space has " + count.str() + " decompositions, above the limit of " +
                        options.limit.str());
  }
  if (ctx.dry_run) return nullptr;
  options.threads = ctx.limits.threads;
  options.stop = ctx.stop;
  const auto r = search_extremes(w, k, options);
  return {{"word", r.word.str()},
          {"k", r.k},
          {"count_explored", r.count_explored.str()},
          {"min_rho", r.min_rho},
          {"min_witness", r.min_witness.to_string()},
          {"max_rho", r.max_rho},
          {"max_witness", r.max_witness.to_string()},
          {"baseline_rho", r.baseline_rho}};
}

json op_block(const Context& ctx) {
  const auto d = block_decomposition(word_param(ctx, ctx.limits.word_cap), size_param(ctx, "p"));
  const auto r = ebwt(d);
  return {{"parts", words_json(d)}, {"l", r.l_column.str()}, {"runs", r.runs()}};
}

json op_bound(const Context& ctx) {
  const auto r = verify_best_bound(word_param(ctx, ctx.limits.word_cap), size_param(ctx, "k"), ctx.alphabet);
  return {{"sigma", r.sigma},       {"bound", r.bound}, {"finer_bound", r.finer_bound},
          {"achieved", r.achieved}, {"ok", r.ok},       {"finer_ok", r.finer_ok}};
}

json op_lyndon(const Context& ctx) {
  const auto d = lyndon_factorization(word_param(ctx, ctx.limits.word_cap));
  const auto r = ebwt(d);
  return {{"parts", words_json(d)}, {"l", r.l_column.str()}, {"runs", r.runs()}};
}

json op_preimage(const Context& ctx) {
  const std::size_t n = size_param(ctx, "n");
  check_cap(n, ctx.limits.preimage_cap, "n");
  const auto fam = preimage_ba(n);
  return {{"n", n},
          {"parts", words_json(fam.parts)},
          {"part_count", fam.part_count},
          {"min_part_length", fam.min_part_length}};
}

json op_family(const Context& ctx) {
  const std::size_t k = size_param(ctx, "k");
  const std::size_t m = static_cast<std::size_t>(uint_param_any(ctx, {"ratio", "m"}));
  const auto f = worst_family(k, m, ctx.limits.family_max_n);
  return {{"k", f.k},
          {"n", f.n},
          {"modulus", std::to_string(f.modulus)},
          {"denominator", f.denominator},
          {"rho", f.rho},
          {"word", f.word.str()},
          {"parts", f.witness.to_string()},
          {"ratio_lower_bound", rational_text(f.ratio_lower_bound)}};
}

json op_cycles(const Context& ctx) {
  const std::size_t n = size_param(ctx, "n");
  const std::size_t k = size_param(ctx, "k");
  check_cap(k, ctx.limits.cycles_k_cap, "k");
  json systems = json::array();
  for (const auto& s : cycle_solutions(n, k)) {
    json indices = json::array();
    for (const auto& i : s.i) indices.push_back(rational_text(i));
    systems.push_back({{"t", s.t}, {"alpha", s.alpha}, {"beta", s.beta}, {"i", indices}, {"feasible", s.feasible}});
  }
  return {{"n", n}, {"k", k}, {"systems", systems}};
}

json op_fixedpoint(const Context& ctx) {
  const std::size_t n = size_param(ctx, "n");
  check_cap(n, ctx.limits.preimage_cap, "n");
  return {{"n", n}, {"fixed_point_free", fixed_point_free(n)}};
}

json op_circulant(const Context& ctx) {
  const std::size_t k = size_param(ctx, "k");
  const bool ok = verify_circulant_inverse(k);
  return {{"k", k}, {"ok", ok}, {"scale", std::to_string((std::int64_t{1} << k) - 1)}};
}

json op_artin(const Context& ctx) {
  const std::uint64_t limit = uint_param_any(ctx, {"limit", "max"});
  if (ctx.limits.artin_cap != 0 && limit > ctx.limits.artin_cap) {
    throw GuardExceeded("artin limit " + std::to_string(limit) + " is above the cap of " +
                        std::to_string(ctx.limits.artin_cap));
  }
  return {{"values", artin_scan(limit)}};
}

json op_health(const Context&) { return {{"status", "ok"}}; }

json op_verify(const Context& ctx) {
  const json* suite = find_param(ctx, "suite");
  if (!suite || !suite->is_string()) throw MalformedInput("missing \"suite\"");
  const auto name = suite->get<std::string>();
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw std::invalid_argument("unknown suite \"" + name + "\"");
  }
  if (ctx.dry_run) return nullptr;
  const auto report = run_suite(name);
  json props = json::array();
  for (const auto& p : report.properties) {
    props.push_back({{"name", p.name}, {"passed", p.passed}, {"detail", p.detail}});
  }
  return {{"suite", report.name}, {"passed", report.passed()}, {"properties", props}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"apply", op_apply},         {"artin", op_artin},         {"block", op_block},
      {"bound", op_bound},         {"bwt", op_bwt},             {"circulant", op_circulant},
      {"compare", op_compare},     {"count", op_count},         {"cycles", op_cycles},
      {"ebwt", op_ebwt},           {"enumerate", op_enumerate}, {"family", op_family},
      {"fib", op_fib},             {"fixedpoint", op_fixedpoint}, {"growth", op_growth},
      {"health", op_health},       {"invert", op_invert},       {"lyndon", op_lyndon},
      {"matrix", op_matrix},       {"preimage", op_preimage},   {"root", op_root},
      {"rotations", op_rotations}, {"runs", op_runs},           {"search", op_search},
      {"verify", op_verify},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& operations() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

JobResponse execute(const JobRequest& request, const Limits& limits, std::stop_token stop, bool dry_run) {
  const auto start = std::chrono::steady_clock::now();
  JobResponse response;
  response.id = request.id;
  const auto fail = [&](std::string code, std::string message) {
    response.error = ApiError{std::move(code), std::move(message)};
  };
  try {
    const auto it = handlers().find(request.operation);
    if (it == handlers().end()) {
      fail("unknown_operation", "unknown operation \"" + request.operation + "\"");
    } else {
      Context ctx{request, limits, stop, dry_run, std::nullopt};
      if (const json* a = find_param(ctx, "alphabet")) {
        if (!a->is_string()) throw MalformedInput("\"alphabet\" must be a string");
        try {
          ctx.alphabet = Alphabet(a->get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw MalformedInput(e.what());
        }
      }
      auto payload = it->second(ctx);
      if (!dry_run || !payload.is_null()) response.payload = std::move(payload);
    }
  } catch (const MalformedInput& e) {
    fail("bad_request", e.what());
  } catch (const GuardExceeded& e) {
    fail("guard_exceeded", e.what());
  } catch (const Cancelled& e) {
    fail("cancelled", e.what());
  } catch (const std::invalid_argument& e) {
    fail("invalid_argument", e.what());
  } catch (const json::exception& e) {
    fail("bad_request", e.what());
  } catch (const std::exception& e) {
    fail("internal", e.what());
  }
  response.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return response;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += scalar_text(v[i]);
    }
    return out;
  }
  return v.dump();
}

std::string aligned(const json& payload) {
  std::size_t width = 0;
  for (const auto& [key, _] : payload.items()) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : payload.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key << scalar_text(value) << '\n';
  }
  return out.str();
}

std::string joined(const json& list, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += sep;
    out += scalar_text(list[i]);
  }
  return out;
}

}  // namespace

std::string format_text(const std::string& operation, const json& payload) {
  if (operation == "ebwt" || operation == "bwt") return payload.at("l").get<std::string>() + "\n";
  if (operation == "invert" || operation == "lyndon" || operation == "block") {
    return joined(payload.at("parts"), ",") + "\n";
  }
  if (operation == "runs") return payload.at("runs").dump() + "\n";
  if (operation == "count") return payload.at("count").get<std::string>() + "\n";
  if (operation == "fib") return payload.at("value").get<std::string>() + "\n";
  if (operation == "compare") return payload.at("order").get<std::string>() + "\n";
  if (operation == "artin") return joined(payload.at("values"), " ") + "\n";
  if (operation == "rotations") return joined(payload.at("rotations"), "\n") + "\n";
  if (operation == "enumerate") {
    const auto& list = payload.at("compositions");
    return list.empty() ? std::string() : joined(list, "\n") + "\n";
  }
  if (operation == "matrix") {
    std::string out;
    for (const auto& row : payload.at("rows")) {
      out += row.at("rotation").get<std::string>() + "  " + row.at("last").get<std::string>() + "\n";
    }
    return out;
  }
  if (operation == "cycles") {
    std::string out;
    for (const auto& s : payload.at("systems")) {
      out += "t=" + joined(s.at("t"), ",") + "  alpha=" + joined(s.at("alpha"), ",") +
             "  beta=" + joined(s.at("beta"), ",") + "  i=" + joined(s.at("i"), ",") + "  " +
             (s.at("feasible").get<bool>() ? "feasible" : "infeasible") + "\n";
    }
    return out;
  }
  if (operation == "verify") {
    std::string out;
    for (const auto& p : payload.at("properties")) {
      out += std::string(p.at("passed").get<bool>() ? "PASS  " : "FAIL  ") + p.at("name").get<std::string>() +
             "  (" + p.at("detail").get<std::string>() + ")\n";
    }
    out += std::string(payload.at("passed").get<bool>() ? "suite passed" : "suite FAILED") + "\n";
    return out;
  }
  return aligned(payload);
}

}  // namespace ebwtlab::api
