#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebwtlab/transform.hpp"

using namespace ebwtlab;

namespace {

// BWT by sorting all rotations explicitly.
std::string naive_bwt(const std::string& w) {
  std::vector<std::string> rs;
  for (std::size_t i = 0; i < w.size(); ++i) rs.push_back(w.substr(i) + w.substr(0, i));
  std::sort(rs.begin(), rs.end());
  std::string l;
  for (const auto& r : rs) l += r.back();
  return l;
}

std::string random_word(std::mt19937_64& rng, std::size_t len, const std::string& sigma) {
  std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += sigma[pick(rng)];
  return w;
}

}  // namespace

TEST_CASE("two-word example") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = Decomposition::parse("baa,bab");
  const auto r = ebwt(d);
  CHECK(r.l_column.str() == "bababa");
  CHECK(r.f_column().str() == "aaabbb");
  CHECK(r.runs() == 5);
  const auto inv = invert_ebwt(Word("bababa"));
  REQUIRE(inv.size() == 2);
  CHECK(inv.parts()[0].str() == "aab");
  CHECK(inv.parts()[1].str() == "abb");
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  CHECK(ms < 1.0);
}

TEST_CASE("bwt of single words") {
  CHECK(bwt(Word("banana")).str() == "nnbaaa");
  CHECK(bwt(Word("a")).str() == "a");
  CHECK(ebwt(Decomposition({Word("abab")})).l_column.str() == "bbaa");
  CHECK(rho(Decomposition({Word("abab")})) == 1);
}

TEST_CASE("singleton eBWT is the BWT") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto w = random_word(rng, 1 + rng() % 40, "abc");
    REQUIRE(ebwt(Decomposition({Word(w)})).l_column.str() == naive_bwt(w));
    REQUIRE(bwt(Word(w)).str() == naive_bwt(w));
  }
}

TEST_CASE("inversion of every non-empty binary word up to length 10") {
  std::size_t count = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      std::string l;
      for (std::size_t i = 0; i < len; ++i) l += (mask >> i & 1) ? 'b' : 'a';
      const auto d = invert_ebwt(Word(l));
      for (const auto& p : d.parts()) REQUIRE(is_primitive(p));
      REQUIRE(ebwt(d).l_column.str() == l);
      ++count;
    }
  }
  CHECK(count == 2046);
}

TEST_CASE("inverting an eBWT recovers the multiset up to conjugacy") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::vector<Word> parts;
    const auto m = 1 + rng() % 4;
    for (std::size_t j = 0; j < m; ++j) {
      Word w(random_word(rng, 1 + rng() % 8, "ab"));
      if (!is_primitive(w)) w = root_exp(w).root;
      parts.push_back(w);
    }
    const Decomposition d(parts);
    REQUIRE(invert_ebwt(ebwt(d).l_column) == canonical_form(d));
  }
}

TEST_CASE("matrix rows are omega-sorted and end in L") {
  const auto rows = ebwt_matrix(Decomposition::parse("baa,bab"));
  REQUIRE(rows.size() == 6);
  std::string l;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    l += static_cast<char>(rows[i].last);
    CHECK(rows[i].rotation[rows[i].rotation.size() - 1] == rows[i].last);
    if (i) CHECK(omega_compare(rows[i - 1].rotation, rows[i].rotation) <= 0);
  }
  CHECK(l == "bababa");
  CHECK(rows[0].rotation.str() == "aab");
}

TEST_CASE("duplicates and powers are allowed") {
  const auto one = rho(Decomposition::parse("ab"));
  const auto two = rho(Decomposition::parse("ab,ab"));
  CHECK(one == 1);
  CHECK(two == 1);
  CHECK(ebwt(Decomposition::parse("ab,ab")).l_column.str() == "bbaa");
}

TEST_CASE("decomposition parsing and errors") {
  CHECK(Decomposition::parse("baa,bab").to_string() == "baa,bab");
  CHECK(Decomposition::parse("baa,bab").concatenation().str() == "baabab");
  CHECK(Decomposition::parse("baa,bab").total_length() == 6);
  CHECK_THROWS_AS(Decomposition::parse("baa,,bab"), std::invalid_argument);
  CHECK_THROWS_AS(Decomposition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Decomposition({Word("a"), Word("")}), std::invalid_argument);
  CHECK_THROWS_AS(invert_ebwt(Word("")), std::invalid_argument);
}

TEST_CASE("canonical form") {
  const auto c = canonical_form(Decomposition::parse("bab,baa"));
  CHECK(c.to_string() == "aab,abb");
}
