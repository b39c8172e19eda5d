#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "ebwtlab/decomposition.hpp"

namespace ebwtlab {

/// Guards applied to every request. A zero cap means unlimited.
struct Limits {
  std::size_t word_cap = 0;
  std::size_t search_word_cap = 0;
  BigInt search_limit = 2'000'000;
  std::size_t enumerate_limit = 1'000'000;
  std::size_t count_n_cap = 1'000'000;
  std::uint64_t artin_cap = 100'000'000;
  std::size_t family_max_n = 10'000'000;
  std::size_t preimage_cap = 10'000'000;
  std::size_t cycles_k_cap = 24;
  unsigned threads = 0;

  /// The interactive service defaults: 4096 symbols, 64 for search.
  static Limits service_defaults();
};

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  Limits limits = Limits::service_defaults();
};

/// Port from EBWTLAB_PORT when set and valid, otherwise `fallback`.
int default_port(int fallback = 8080);

/// Applies "key = value" lines ('#' starts a comment). Unknown keys and
/// malformed values throw std::invalid_argument with the line number.
void apply_config_text(ServiceConfig& config, std::string_view text);
ServiceConfig load_config(const std::filesystem::path& path);

}  // namespace ebwtlab
