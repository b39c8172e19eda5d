// ebwtlab: command-line front end. Every subcommand maps to one api
// operation; --json prints the same payload bytes the HTTP service returns.

#include <csignal>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ebwtlab/api.hpp"
#include "ebwtlab/config.hpp"
#include "ebwtlab/service.hpp"
#include "ebwtlab/suites.hpp"

namespace {

using ebwtlab::api::json;

ebwtlab::Service* active_service = nullptr;

void on_signal(int) {
  if (active_service) active_service->stop();
}

struct Options {
  bool json_output = false;
  std::string alphabet;
  std::string word;
  std::string parts;
  std::string lengths;
  std::string suite;
  std::string config_path;
  std::string host;
  std::string limit;
  std::size_t n = 0, k = 0, p = 0, c = 0, ratio = 0;
  std::uint64_t max = 0;
  int port = 0;
  unsigned threads = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::stringstream in(text);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int run_job(const std::string& operation, json body, const Options& opt) {
  ebwtlab::Limits limits;
  limits.threads = opt.threads;
  if (!opt.limit.empty()) {
    if (opt.limit.find_first_not_of("0123456789") != std::string::npos) {
      std::cerr << "error: --limit must be a non-negative integer\n";
      return 1;
    }
    limits.search_limit = ebwtlab::BigInt(opt.limit);
  }
  if (!opt.alphabet.empty()) body["alphabet"] = opt.alphabet;

  ebwtlab::api::JobResponse response;
  try {
    response = ebwtlab::api::execute(ebwtlab::api::JobRequest::from_json(operation, body), limits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (response.error) {
    if (opt.json_output) {
      std::cerr << ebwtlab::api::dump_payload(response.body()) << '\n';
    } else {
      std::cerr << "error (" << response.error->code << "): " << response.error->message << '\n';
    }
    return 1;
  }
  if (opt.json_output) {
    std::cout << ebwtlab::api::dump_payload(*response.payload) << '\n';
  } else {
    std::cout << ebwtlab::api::format_text(operation, *response.payload);
  }
  if (operation == "verify" && !response.payload->at("passed").get<bool>()) return 1;
  return 0;
}

int serve(const Options& opt) {
  ebwtlab::ServiceConfig config;
  config.port = ebwtlab::default_port(config.port);
  try {
    if (!opt.config_path.empty()) config = ebwtlab::load_config(opt.config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (opt.port) config.port = opt.port;
  if (!opt.host.empty()) config.host = opt.host;
  if (opt.threads) config.limits.threads = opt.threads;

  ebwtlab::Service service(config);
  active_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on " << config.host << ':' << config.port << '\n';
  const bool ok = service.listen();
  active_service = nullptr;
  if (!ok) {
    std::cerr << "error: cannot listen on " << config.host << ':' << config.port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ebwtlab: word decompositions and the runs of their extended BWT"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json_output, "Print machine-readable JSON");
  app.add_option("--alphabet", opt.alphabet, "Declared alphabet (string of distinct symbols)");
  app.add_option("--threads", opt.threads, "Worker threads for search (0 = all cores)");

  std::string chosen;
  json body = json::object();

  const auto word_cmd = [&](const char* name, const char* help, const char* field = "word") {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", opt.word, "Input word")->required();
    sub->callback([&, name, field] {
      chosen = name;
      body[field] = opt.word;
    });
    return sub;
  };

  word_cmd("bwt", "BWT of a word");
  word_cmd("invert", "Invert an eBWT image into its multiset of primitive words", "l");
  word_cmd("runs", "Number of adjacent unequal symbol pairs");
  word_cmd("lyndon", "Lyndon factorization and its eBWT");
  word_cmd("rotations", "All circular rotations");
  word_cmd("root", "Primitive root and exponent");

  for (const auto* name : {"ebwt", "matrix"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "ebwt" ? "eBWT of a comma-separated multiset"
                                                                      : "Sorted eBWT matrix rows");
    sub->add_option("parts", opt.parts, "Parts joined by ',' (e.g. baa,bab)")->required();
    sub->callback([&, name] {
      chosen = name;
      body["parts"] = split(opt.parts, ',');
    });
  }

  {
    auto* sub = app.add_subcommand("compare", "Omega-order comparison of two words");
    sub->add_option("u", opt.word)->required();
    sub->add_option("v", opt.parts)->required();
    sub->callback([&] {
      chosen = "compare";
      body["parts"] = {opt.word, opt.parts};
    });
  }

  for (const auto* name : {"count", "enumerate"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "count" ? "Number of k-restricted decompositions"
                                                                       : "List compositions with parts > k");
    sub->add_option("--n", opt.n, "Word length")->required();
    sub->add_option("--k", opt.k, "Restriction: every part longer than k")->required();
    sub->callback([&, name] {
      chosen = name;
      body["n"] = opt.n;
      body["k"] = opt.k;
    });
  }

  {
    auto* sub = app.add_subcommand("search", "Exact min/max runs over all k-restricted decompositions");
    sub->add_option("--word", opt.word)->required();
    sub->add_option("--k", opt.k)->required();
    sub->add_option("--limit", opt.limit, "Refuse spaces larger than this (default 2000000)");
    sub->callback([&] {
      chosen = "search";
      body["word"] = opt.word;
      body["k"] = opt.k;
      if (!opt.limit.empty()) body["limit"] = opt.limit;
    });
  }
  {
    auto* sub = app.add_subcommand("apply", "Split a word by part lengths and compute its eBWT");
    sub->add_option("--word", opt.word)->required();
    sub->add_option("--lengths", opt.lengths, "Part lengths joined by '+' (e.g. 3+3)")->required();
    sub->add_option("--k", opt.k);
    sub->callback([&] {
      chosen = "apply";
      body["word"] = opt.word;
      json lengths = json::array();
      for (const auto& piece : split(opt.lengths, '+')) lengths.push_back(piece);
      body["parts_lengths"] = lengths;
      body["k"] = opt.k;
    });
  }
  {
    auto* sub = app.add_subcommand("block", "Equal-block decomposition");
    sub->add_option("--word", opt.word)->required();
    sub->add_option("--p", opt.p, "Block length")->required();
    sub->callback([&] {
      chosen = "block";
      body["word"] = opt.word;
      body["p"] = opt.p;
    });
  }
  {
    auto* sub = app.add_subcommand("bound", "Check the best-decomposition bound on the block split");
    sub->add_option("--word", opt.word)->required();
    sub->add_option("--k", opt.k)->required();
    sub->callback([&] {
      chosen = "bound";
      body["word"] = opt.word;
      body["k"] = opt.k;
    });
  }
  {
    auto* sub = app.add_subcommand("family", "Worst-case word for restriction k and ratio M");
    sub->add_option("--k", opt.k)->required();
    sub->add_option("--ratio", opt.ratio, "Target ratio M")->required();
    sub->callback([&] {
      chosen = "family";
      body["k"] = opt.k;
      body["ratio"] = opt.ratio;
    });
  }
  {
    auto* sub = app.add_subcommand("cycles", "Candidate length-k cycles in the preimage of (ba)^n");
    sub->add_option("--n", opt.n)->required();
    sub->add_option("--k", opt.k)->required();
    sub->callback([&] {
      chosen = "cycles";
      body["n"] = opt.n;
      body["k"] = opt.k;
    });
  }
  for (const auto* name : {"preimage", "fixedpoint"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "preimage" ? "Multiset W(n) with eBWT (ba)^n"
                                                                          : "Check the (ba)^n permutation for fixed points");
    sub->add_option("--n", opt.n)->required();
    sub->callback([&, name] {
      chosen = name;
      body["n"] = opt.n;
    });
  }
  {
    auto* sub = app.add_subcommand("artin", "n <= max whose (ba)^n has a single-word preimage");
    sub->add_option("--max", opt.max)->required();
    sub->callback([&] {
      chosen = "artin";
      body["limit"] = opt.max;
    });
  }
  {
    auto* sub = app.add_subcommand("circulant", "Exact check of (2S - I) C(1, 2, ..., 2^{k-1}) = (2^k - 1) I");
    sub->add_option("--k", opt.k)->required();
    sub->callback([&] {
      chosen = "circulant";
      body["k"] = opt.k;
    });
  }
  {
    auto* sub = app.add_subcommand("growth", "Growth constant of k-restricted decomposition counts");
    sub->add_option("--k", opt.k)->required();
    sub->callback([&] {
      chosen = "growth";
      body["k"] = opt.k;
    });
  }
  {
    auto* sub = app.add_subcommand("fib", "Generalized Fibonacci number G^c_n");
    sub->add_option("--c", opt.c)->required();
    sub->add_option("--n", opt.n)->required();
    sub->callback([&] {
      chosen = "fib";
      body["c"] = opt.c;
      body["n"] = opt.n;
    });
  }
  {
    auto* sub = app.add_subcommand("verify", "Run a property suite");
    sub->add_option("--suite", opt.suite)->required()->check(CLI::IsMember(ebwtlab::suite_names()));
    sub->callback([&] {
      chosen = "verify";
      body["suite"] = opt.suite;
    });
  }
  {
    auto* sub = app.add_subcommand("serve", "Run the JSON/HTTP service");
    sub->add_option("--port", opt.port, "Port (default $EBWTLAB_PORT or 8080)");
    sub->add_option("--host", opt.host, "Bind address (default 0.0.0.0)");
    sub->add_option("--config", opt.config_path, "key=value config file");
    sub->callback([&] { chosen = "serve"; });
  }

  CLI11_PARSE(app, argc, argv);

  if (chosen == "serve") return serve(opt);
  return run_job(chosen, std::move(body), opt);
}
