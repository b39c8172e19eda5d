#include "doctest.h"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

#include "ebwtlab/decomposition.hpp"
#include "ebwtlab/errors.hpp"

using namespace ebwtlab;

namespace {

// All compositions of n with parts >= m, by plain recursion.
void brute_compositions(std::size_t n, std::size_t m, std::vector<std::size_t>& prefix,
                        std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  for (std::size_t p = m; p <= n; ++p) {
    prefix.push_back(p);
    brute_compositions(n - p, m, prefix, out);
    prefix.pop_back();
  }
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt v = 1;
  for (std::size_t i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

// Compositions into q parts >= k + 1: C(n - qk - 1, q - 1).
BigInt binomial_sum(std::size_t n, std::size_t k) {
  BigInt total = 0;
  for (std::size_t q = 1; q * (k + 1) <= n; ++q) total += binomial(n - q * k - 1, q - 1);
  return total;
}

// Newton on X^{k+1} - X^k - 1 from 2.
double newton_root(std::size_t k) {
  double x = 2.0;
  for (int i = 0; i < 100; ++i) {
    const double f = std::pow(x, k + 1) - std::pow(x, k) - 1;
    const double df = (k + 1) * std::pow(x, k) - k * std::pow(x, k - 1);
    x -= f / df;
  }
  return x;
}

std::size_t brute_min_rho(const Word& w, std::size_t k, std::size_t& max_out) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> prefix;
  brute_compositions(w.size(), k + 1, prefix, all);
  std::size_t best = SIZE_MAX;
  max_out = 0;
  for (const auto& parts : all) {
    Composition c{parts, k + 1};
    const auto r = rho(apply_composition(w, c));
    best = std::min(best, r);
    max_out = std::max(max_out, r);
  }
  return best;
}

}  // namespace

TEST_CASE("count examples") {
  CHECK(count_decompositions(6, 1) == 5);
  CHECK(count_decompositions(2, 1) == 1);
  CHECK_THROWS_AS(count_decompositions(1, 1), std::invalid_argument);
  CHECK(count_decompositions(4, 0) == 8);
  CHECK(generalized_fibonacci(2, 10) == 89);
  CHECK(generalized_fibonacci(1, 5) == 32);
  CHECK_THROWS_AS(generalized_fibonacci(0, 3), std::invalid_argument);
}

TEST_CASE("enumeration example") {
  const auto cs = enumerate_compositions(6, 1);
  std::vector<std::string> got;
  for (const auto& c : cs) got.push_back(c.to_string());
  CHECK(got == std::vector<std::string>{"2+2+2", "2+4", "3+3", "4+2", "6"});
  CHECK(enumerate_compositions(1, 1).empty());
}

TEST_CASE("stream, recursion, formula and binomial sum agree") {
  for (std::size_t k = 0; k <= 4; ++k) {
    for (std::size_t n = k + 1; n <= 22; ++n) {
      std::vector<std::vector<std::size_t>> brute;
      std::vector<std::size_t> prefix;
      brute_compositions(n, k + 1, prefix, brute);
      std::vector<std::vector<std::size_t>> streamed;
      CompositionStream s(n, k);
      Composition c;
      while (s.next(c)) {
        REQUIRE(c.admissible());
        REQUIRE(c.sum() == n);
        streamed.push_back(c.parts);
      }
      REQUIRE(streamed == brute);  // same set, and both lexicographic
      REQUIRE(BigInt(brute.size()) == count_decompositions(n, k));
      REQUIRE(count_decompositions(n, k) == binomial_sum(n, k));
    }
  }
}

TEST_CASE("big counts stay exact") {
  // G^2_n is the Fibonacci sequence shifted by one.
  BigInt a = 1, b = 1;
  for (int i = 2; i <= 300; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  CHECK(generalized_fibonacci(2, 300) == b);
  CHECK(count_decompositions(600, 3) == binomial_sum(600, 3));
}

TEST_CASE("growth rate matches an independent root finder") {
  CHECK(std::abs(growth_rate(1) - (1 + std::sqrt(5.0)) / 2) < 1e-9);
  for (std::size_t k = 1; k <= 12; ++k) {
    const double r = growth_rate(k);
    CHECK(r > 1.0);
    CHECK(r < 2.0);
    CHECK(std::abs(r - newton_root(k)) < 1e-10);
  }
  CHECK_THROWS_AS(growth_rate(0), std::invalid_argument);
}

TEST_CASE("count ratio converges to the growth rate") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto hi = count_decompositions(201, k), lo = count_decompositions(200, k);
    const double ratio = hi.convert_to<double>() / lo.convert_to<double>();
    CHECK(std::abs(ratio - growth_rate(k)) < 1e-6);
  }
}

TEST_CASE("composition parse and apply") {
  const auto c = Composition::parse("2+2+2", 2);
  CHECK(c.parts == std::vector<std::size_t>{2, 2, 2});
  CHECK(c.admissible());
  CHECK_FALSE(Composition::parse("1+5", 2).admissible());
  CHECK_THROWS_AS(Composition::parse("2++2"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("x"), std::invalid_argument);
  const auto d = apply_composition(Word("abcdef"), Composition::parse("2+4"));
  CHECK(d.to_string() == "ab,cdef");
  CHECK_THROWS_AS(apply_composition(Word("abc"), Composition::parse("2+2")), std::invalid_argument);
}

TEST_CASE("search example and brute force agreement") {
  const auto r = search_extremes(Word("baabab"), 2);
  CHECK(r.count_explored == 2);
  CHECK(r.min_rho == 3);
  CHECK(r.min_witness.to_string() == "6");
  CHECK(r.max_rho == 5);
  CHECK(r.max_witness.to_string() == "3+3");
  CHECK(r.baseline_rho == runs(bwt(Word("baabab"))));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    std::string s;
    const auto len = 2 + rng() % 13;
    for (std::size_t j = 0; j < len; ++j) s += "ab"[rng() % 2];
    const std::size_t k = rng() % 3;
    if (len < k + 1) continue;
    std::size_t brute_max = 0;
    const auto brute_min = brute_min_rho(Word(s), k, brute_max);
    SearchOptions o;
    o.threads = 1 + static_cast<unsigned>(rng() % 4);
    const auto got = search_extremes(Word(s), k, o);
    REQUIRE(got.min_rho == brute_min);
    REQUIRE(got.max_rho == brute_max);
    REQUIRE(rho(apply_composition(Word(s), got.min_witness)) == got.min_rho);
    REQUIRE(rho(apply_composition(Word(s), got.max_witness)) == got.max_rho);
  }
}

TEST_CASE("search witness does not depend on thread count") {
  const Word w("abbabaabbaababba");
  SearchOptions one;
  one.threads = 1;
  SearchOptions many;
  many.threads = 8;
  const auto a = search_extremes(w, 1, one), b = search_extremes(w, 1, many);
  CHECK(a.min_witness == b.min_witness);
  CHECK(a.max_witness == b.max_witness);
}

TEST_CASE("search guards and cancellation") {
  SearchOptions small;
  small.limit = 10;
  CHECK_THROWS_AS(search_extremes(Word(std::string(30, 'a')), 1, small), GuardExceeded);
  std::stop_source src;
  src.request_stop();
  SearchOptions stopped;
  stopped.stop = src.get_token();
  CHECK_THROWS_AS(search_extremes(Word("abababababababababab"), 1, stopped), Cancelled);
  CHECK_THROWS_AS(search_extremes(Word("ab"), 2), std::invalid_argument);
}

TEST_CASE("block decomposition") {
  CHECK(block_decomposition(Word("abcdefg"), 3).to_string() == "abc,defg");
  CHECK(block_decomposition(Word("abcdef"), 3).to_string() == "abc,def");
  CHECK(block_decomposition(Word("abcde"), 3).to_string() == "abcde");
  CHECK_THROWS_AS(block_decomposition(Word("ab"), 3), std::invalid_argument);
  CHECK_THROWS_AS(block_decomposition(Word("ab"), 0), std::invalid_argument);
}

TEST_CASE("best bound on the block split") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::string sigma = i % 2 ? "abc" : "ab";
    const std::size_t k = rng() % 4;
    std::string s;
    const auto len = k + 1 + rng() % 120;
    for (std::size_t j = 0; j < len; ++j) s += sigma[rng() % sigma.size()];
    const auto r = verify_best_bound(Word(s), k, Alphabet(sigma));
    REQUIRE(r.sigma == sigma.size());
    REQUIRE(r.ok);
    REQUIRE(r.finer_ok);
    REQUIRE(r.achieved == rho(block_decomposition(Word(s), k + 1)));
  }
  const auto r = verify_best_bound(Word("ab"), 1);
  CHECK(r.bound == 4 + 4 + 2);
}

TEST_CASE("lyndon factorization") {
  CHECK(lyndon_factorization(Word("banana")).to_string() == "b,an,an,a");
  CHECK(is_lyndon(Word("aab")));
  CHECK_FALSE(is_lyndon(Word("aba")));
  CHECK_FALSE(is_lyndon(Word("abab")));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    std::string s;
    for (std::size_t j = 0, len = 1 + rng() % 30; j < len; ++j) s += "abc"[rng() % 3];
    const auto d = lyndon_factorization(Word(s));
    REQUIRE(d.concatenation().str() == s);
    for (std::size_t j = 0; j < d.size(); ++j) {
      REQUIRE(is_lyndon(d.parts()[j]));
      if (j) REQUIRE(!(d.parts()[j - 1] < d.parts()[j]));
    }
  }
}
