#include "ebwtlab/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ebwtlab {

Limits Limits::service_defaults() {
  Limits l;
  l.word_cap = 4096;
  l.search_word_cap = 64;
  l.enumerate_limit = 100'000;
  l.count_n_cap = 100'000;
  l.artin_cap = 10'000'000;
  l.family_max_n = 1'000'000;
  l.preimage_cap = 1'000'000;
  l.cycles_k_cap = 20;
  return l;
}

int default_port(int fallback) {
  const char* env = std::getenv("EBWTLAB_PORT");
  if (!env) return fallback;
  int port = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), port);
  if (ec != std::errc() || ptr != s.data() + s.size() || port <= 0 || port > 65535) return fallback;
  return port;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == s.npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view value, std::size_t line) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": expected a non-negative integer, got \"" +
                                std::string(value) + "\"");
  }
  return out;
}

}  // namespace

void apply_config_text(ServiceConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != s.npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == s.npos) throw std::invalid_argument("config line " + std::to_string(line) + ": missing '='");
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    auto& l = config.limits;
    if (key == "host") {
      config.host = std::string(value);
    } else if (key == "port") {
      config.port = parse_number<int>(value, line);
    } else if (key == "word_cap") {
      l.word_cap = parse_number<std::size_t>(value, line);
    } else if (key == "search_word_cap") {
      l.search_word_cap = parse_number<std::size_t>(value, line);
    } else if (key == "search_limit") {
      parse_number<std::uint64_t>(value, line);
      l.search_limit = BigInt(std::string(value));
    } else if (key == "enumerate_limit") {
      l.enumerate_limit = parse_number<std::size_t>(value, line);
    } else if (key == "count_n_cap") {
      l.count_n_cap = parse_number<std::size_t>(value, line);
    } else if (key == "artin_cap") {
      l.artin_cap = parse_number<std::uint64_t>(value, line);
    } else if (key == "family_max_n") {
      l.family_max_n = parse_number<std::size_t>(value, line);
    } else if (key == "preimage_cap") {
      l.preimage_cap = parse_number<std::size_t>(value, line);
    } else if (key == "cycles_k_cap") {
      l.cycles_k_cap = parse_number<std::size_t>(value, line);
    } else if (key == "threads") {
      l.threads = parse_number<unsigned>(value, line);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line) + ": unknown key \"" + std::string(key) + "\"");
    }
  }
}

ServiceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  ServiceConfig config;
  config.port = default_port(config.port);
  apply_config_text(config, buffer.str());
  return config;
}

}  // namespace ebwtlab
