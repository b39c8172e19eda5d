#pragma once

// Named property suites runnable from `ebwtlab verify --suite <name>`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ebwtlab {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample on failure, coverage summary on success
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::string name;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// roundtrip, counting, growth, bounds, structural, adversary, artin,
/// circulant, and "all" for every one of them.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 20250101);

}  // namespace ebwtlab
