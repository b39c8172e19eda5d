#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebwtlab/adversary.hpp"
#include "ebwtlab/errors.hpp"

using namespace ebwtlab;

namespace {

std::string ba_power(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += "ba";
  return s;
}

// Cycle lengths of x -> 2x mod (2n + 1) on 1..2n, i.e. orbit sizes of the
// multiplicative action of 2.
std::vector<std::size_t> doubling_orbits(std::size_t n) {
  const std::size_t m = 2 * n + 1;
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> out;
  for (std::size_t x = 1; x < m; ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = 2 * y % m) {
      seen[y] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("preimage examples") {
  const auto f4 = preimage_ba(4);
  std::vector<std::size_t> lengths;
  for (const auto& p : f4.parts.parts()) lengths.push_back(p.size());
  CHECK(std::find(lengths.begin(), lengths.end(), 2) != lengths.end());
  CHECK(f4.parts.to_string() == "aaabbb,ab");
  CHECK(preimage_ba(2).parts.to_string() == "aabb");
  CHECK(preimage_ba(1).parts.to_string() == "ab");
  CHECK_THROWS_AS(preimage_ba(0), std::invalid_argument);
}

TEST_CASE("preimage agrees with generic inversion and conserves letters") {
  for (std::size_t n = 1; n <= 150; ++n) {
    const auto f = preimage_ba(n);
    REQUIRE(f.parts == invert_ebwt(Word(ba_power(n))));
    REQUIRE(f.parts.total_length() == 2 * n);
    REQUIRE(ebwt(f.parts).l_column.str() == ba_power(n));
    REQUIRE(f.part_count == f.parts.size());
    std::vector<std::size_t> lengths = ba_cycle_lengths(n);
    std::sort(lengths.begin(), lengths.end());
    REQUIRE(lengths == doubling_orbits(n));
    REQUIRE(f.min_part_length == lengths.front());
  }
}

TEST_CASE("cycle systems") {
  const auto s = cycle_solutions(4, 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].t == std::vector<int>{0, 1});
  CHECK(s[0].i[0] == Rational(2 * 4 + 1, 3));
  CHECK(s[0].feasible);
  CHECK(cycle_solutions(5, 3).size() == 2);
  CHECK_THROWS_AS(cycle_solutions(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_solutions(5, 31), GuardExceeded);
}

TEST_CASE("alpha and beta are exact with the stated bounds") {
  for (std::size_t k = 2; k <= 10; ++k) {
    const std::int64_t full = (std::int64_t{1} << k) - 1;
    for (const auto& sys : cycle_solutions(7, k)) {
      REQUIRE(sys.t.front() == 0);
      REQUIRE(sys.t.back() == 1);
      for (std::size_t j = 0; j < k; ++j) {
        REQUIRE(sys.alpha[j] >= 1);
        REQUIRE(sys.alpha[j] <= full - 1);
        REQUIRE(sys.beta[j] >= 0);
        REQUIRE(sys.beta[j] <= full);
        REQUIRE(sys.i[j] * Rational(full) == Rational(sys.alpha[j] * 7 + sys.beta[j]));
      }
    }
  }
}

TEST_CASE("solver agrees with the permutation") {
  for (std::size_t n = 1; n <= 120; ++n) {
    const auto lengths = ba_cycle_lengths(n);
    for (std::size_t k = 2; k <= 8; ++k) {
      const bool present = std::find(lengths.begin(), lengths.end(), k) != lengths.end();
      REQUIRE(has_feasible_cycle(n, k) == present);
    }
    REQUIRE(fixed_point_free(n));
    REQUIRE(has_feasible_cycle(n, 2) == (n % 3 == 1));
  }
}

TEST_CASE("worst family") {
  const auto f = worst_family(2, 2);
  CHECK(f.n == 21);
  CHECK(f.rho == 41);
  CHECK(f.denominator == 18);
  CHECK(f.modulus == 3);
  CHECK(f.ratio_lower_bound == Rational(41, 18));
  CHECK(f.ratio_lower_bound >= Rational(2));
  CHECK(f.word.size() == 42);
  CHECK(ebwt(f.witness).runs() == f.rho);
  for (const auto& p : f.witness.parts()) CHECK(p.size() > 2);

  const auto f1 = worst_family(1, 3);
  CHECK(f1.modulus == 1);
  CHECK(f1.rho >= 3 * f1.denominator);
  CHECK_THROWS_AS(worst_family(5, 1000, 1000), GuardExceeded);
  CHECK_THROWS_AS(worst_family(0, 2), std::invalid_argument);
}

TEST_CASE("multiples of the modulus have no short cycles") {
  for (std::size_t k = 2; k <= 4; ++k) {
    std::size_t modulus = 1;
    for (std::size_t j = 2; j <= k; ++j) modulus *= (std::size_t{1} << j) - 1;
    for (std::size_t n = modulus; n <= 3000; n += modulus) REQUIRE(preimage_ba(n).min_part_length > k);
  }
}

TEST_CASE("circulant identity") {
  for (std::size_t k = 2; k <= 16; ++k) CHECK(verify_circulant_inverse(k));
  const auto s = shift_matrix(3);
  CHECK(s(0, 1) == 1);
  CHECK(s(2, 0) == 1);
  CHECK(circulant({1, 2, 4})(1, 0) == 4);
  const auto lhs = (2 * shift_matrix(3) - identity_matrix(3)) * circulant({1, 2, 4});
  CHECK(lhs == 7 * identity_matrix(3));
  CHECK_THROWS_AS(verify_circulant_inverse(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_circulant_inverse(63), GuardExceeded);
}

TEST_CASE("artin scan and its relation to single preimages") {
  const std::vector<std::uint64_t> listed{2, 4, 10, 12, 18, 28, 36, 52, 58};
  CHECK(artin_scan(58) == listed);
  CHECK(artin_scan(12) == std::vector<std::uint64_t>{2, 4, 10, 12});
  CHECK(artin_scan(1).empty());
  // 61 is prime and 2 is a primitive root modulo 61.
  CHECK(artin_candidate(60));
  CHECK(artin_scan(60).back() == 60);
  for (std::uint64_t n = 1; n <= 400; ++n) {
    std::size_t order = 0;
    if (is_prime(n + 1) && n + 1 > 2) {
      std::uint64_t x = 1;
      do {
        x = 2 * x % (n + 1);
        ++order;
      } while (x != 1);
    }
    REQUIRE(artin_candidate(n) == (order == n));
  }
  // (ba)^n has length 2n; a single preimage word needs a candidate length.
  for (std::size_t n = 1; n <= 200; ++n) REQUIRE((preimage_ba(n).part_count == 1) == artin_candidate(2 * n));
}
