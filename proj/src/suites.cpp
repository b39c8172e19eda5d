#include "ebwtlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ebwtlab/adversary.hpp"
#include "ebwtlab/decomposition.hpp"
#include "ebwtlab/transform.hpp"
#include "ebwtlab/word.hpp"

namespace ebwtlab {

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

namespace {

struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool condition, const std::string& counterexample) {
  if (!condition) throw PropertyFailure(counterexample);
}

using Property = std::pair<std::string, std::function<std::string(std::mt19937_64&)>>;

Word random_word(std::mt19937_64& rng, std::size_t sigma, std::size_t length) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(sigma) - 1);
  std::string s(length, 'a');
  for (auto& c : s) c = static_cast<char>('a' + letter(rng));
  return Word(std::move(s));
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word binary_word(std::uint64_t bits, std::size_t length) {
  std::string s(length, 'a');
  for (std::size_t i = 0; i < length; ++i) {
    if ((bits >> (length - 1 - i)) & 1) s[i] = 'b';
  }
  return Word(std::move(s));
}

// Independent of ebwt(): materialize and sort rotations lexicographically.
Word naive_bwt(const Word& w) {
  auto rots = rotations(w);
  std::sort(rots.begin(), rots.end());
  std::string out;
  for (const auto& r : rots) out.push_back(static_cast<char>(r[r.size() - 1]));
  return Word(std::move(out));
}

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

// Stars and bars: compositions of n with p parts >= m number C(n - mp + p - 1, p - 1).
BigInt binomial_sum_count(std::size_t n, std::size_t k) {
  const std::int64_t m = static_cast<std::int64_t>(k) + 1;
  BigInt total = 0;
  for (std::int64_t p = 1; p * m <= static_cast<std::int64_t>(n); ++p) {
    total += binomial(static_cast<std::int64_t>(n) - m * p + p - 1, p - 1);
  }
  return total;
}

std::string describe(const Decomposition& d) { return "{" + d.to_string() + "}"; }

// ---------------------------------------------------------------- roundtrip

std::vector<Property> roundtrip_properties() {
  return {
      {"ebwt_of_inverse_exhaustive_binary",
       [](std::mt19937_64&) {
         std::size_t words = 0;
         for (std::size_t len = 1; len <= 10; ++len) {
           for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
             const Word l = binary_word(bits, len);
             const auto parts = invert_ebwt(l);
             check(ebwt(parts).l_column == l, "L=" + l.str() + " inverse " + describe(parts));
             for (const auto& p : parts.parts()) check(is_primitive(p), "non-primitive part " + p.str());
             ++words;
           }
         }
         return std::to_string(words) + " words";
       }},
      {"ebwt_of_inverse_random",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 10'000; ++trial) {
           const Word l = random_word(rng, uniform(rng, 2, 4), uniform(rng, 1, 200));
           const auto parts = invert_ebwt(l);
           check(ebwt(parts).l_column == l, "L=" + l.str());
           for (const auto& p : parts.parts()) check(is_primitive(p), "non-primitive part " + p.str());
         }
         return std::string("10000 words, length <= 200");
       }},
      {"inverse_of_ebwt_primitive_multisets",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 2000; ++trial) {
           const std::size_t sigma = uniform(rng, 2, 3);
           std::vector<Word> parts;
           std::size_t total = 0;
           const std::size_t target = uniform(rng, 1, 60);
           while (total < target) {
             Word w = random_word(rng, sigma, uniform(rng, 1, std::min<std::size_t>(10, 60 - total)));
             if (!is_primitive(w)) continue;
             total += w.size();
             parts.push_back(least_rotation(w));
           }
           const auto expected = canonical_form(Decomposition(parts));
           const auto got = invert_ebwt(ebwt(expected).l_column);
           check(got == expected, describe(expected) + " came back as " + describe(got));
         }
         return std::string("2000 multisets, total length <= 60");
       }},
      {"singleton_equals_naive_bwt",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 500; ++trial) {
           const Word w = random_word(rng, uniform(rng, 1, 4), uniform(rng, 1, 60));
           check(ebwt(Decomposition({w})).l_column == naive_bwt(w), "w=" + w.str());
         }
         return std::string("500 words");
       }},
      {"matrix_rows_sorted_and_consistent",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 300; ++trial) {
           std::vector<Word> parts;
           for (std::size_t i = 0, m = uniform(rng, 1, 5); i < m; ++i) {
             parts.push_back(random_word(rng, 2, uniform(rng, 1, 8)));
           }
           const Decomposition d(parts);
           const auto rows = ebwt_matrix(d);
           const auto result = ebwt(d);
           std::string last, first;
           for (std::size_t i = 0; i < rows.size(); ++i) {
             if (i) check(omega_compare(rows[i - 1].rotation, rows[i].rotation) <= 0, "unsorted " + describe(d));
             last.push_back(static_cast<char>(rows[i].last));
             first.push_back(static_cast<char>(rows[i].rotation[0]));
           }
           check(last == result.l_column.str(), "L mismatch " + describe(d));
           check(first == result.f_column().str(), "F mismatch " + describe(d));
         }
         return std::string("300 multisets");
       }},
  };
}

// ----------------------------------------------------------------- counting

std::vector<Property> counting_properties() {
  return {
      {"enumeration_equals_formula_equals_binomial_sum",
       [](std::mt19937_64&) {
         std::size_t cases = 0;
         for (std::size_t k = 0; k <= 4; ++k) {
           for (std::size_t n = k + 1; n <= 22; ++n) {
             CompositionStream stream(n, k);
             Composition c, previous;
             BigInt streamed = 0;
             while (stream.next(c)) {
               check(c.sum() == n && c.admissible(), "bad composition " + c.to_string());
               check(streamed == 0 || previous < c, "order violated at " + c.to_string());
               previous = c;
               ++streamed;
             }
             const std::string where = " n=" + std::to_string(n) + " k=" + std::to_string(k);
             check(streamed == count_decompositions(n, k), "stream vs formula" + where);
             check(streamed == binomial_sum_count(n, k), "stream vs binomial sum" + where);
             ++cases;
           }
         }
         return std::to_string(cases) + " (n, k) pairs";
       }},
      {"harris_styles_identity",
       [](std::mt19937_64&) {
         for (std::size_t c = 1; c <= 6; ++c) {
           for (std::size_t n = 0; n <= 60; ++n) {
             BigInt sum = 0;
             for (std::int64_t p = 0; p * static_cast<std::int64_t>(c) <= static_cast<std::int64_t>(n); ++p) {
               sum += binomial(static_cast<std::int64_t>(n) - p * static_cast<std::int64_t>(c) + p, p);
             }
             check(sum == generalized_fibonacci(c, n), "c=" + std::to_string(c) + " n=" + std::to_string(n));
           }
         }
         return std::string("c <= 6, n <= 60");
       }},
      {"restriction_nesting",
       [](std::mt19937_64&) {
         for (std::size_t n = 1; n <= 16; ++n) {
           for (std::size_t k = 0; k + 2 <= n; ++k) {
             const auto wider = enumerate_compositions(n, k);
             const auto narrower = enumerate_compositions(n, k + 1);
             check(narrower.size() <= wider.size(), "count increased n=" + std::to_string(n));
             std::set<std::vector<std::size_t>> pool;
             for (const auto& c : wider) pool.insert(c.parts);
             for (const auto& c : narrower) check(pool.count(c.parts) == 1, "not nested: " + c.to_string());
           }
         }
         return std::string("n <= 16");
       }},
      {"apply_then_concatenate_is_identity",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 40; ++trial) {
           const Word w = random_word(rng, 3, uniform(rng, 1, 14));
           for (std::size_t k = 0; k <= 2 && k < w.size(); ++k) {
             for (const auto& c : enumerate_compositions(w.size(), k)) {
               const auto d = apply_composition(w, c);
               check(d.concatenation() == w, w.str() + " / " + c.to_string());
               for (std::size_t i = 0; i < d.size(); ++i) check(d.parts()[i].size() == c.parts[i], c.to_string());
             }
           }
         }
         return std::string("40 words, k <= 2");
       }},
  };
}

// ------------------------------------------------------------------- growth

std::vector<Property> growth_properties() {
  return {
      {"fibonacci_ratio_converges_to_root",
       [](std::mt19937_64&) {
         std::ostringstream out;
         for (std::size_t k = 1; k <= 5; ++k) {
           const auto a = generalized_fibonacci(k + 1, 200).convert_to<long double>();
           const auto b = generalized_fibonacci(k + 1, 201).convert_to<long double>();
           const double ratio = static_cast<double>(b / a);
           const double err = std::abs(ratio - growth_rate(k));
           check(err < 1e-6, "k=" + std::to_string(k) + " error " + std::to_string(err));
           out << "k=" << k << " err=" << err << ' ';
         }
         return out.str();
       }},
      {"golden_ratio",
       [](std::mt19937_64&) {
         const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
         check(std::abs(growth_rate(1) - golden) < 1e-9, "growth_rate(1) != golden ratio");
         check(std::abs(growth_rate(1) - 1.6180339887) < 1e-9, "growth_rate(1) != 1.6180339887");
         return std::string("|r - phi| < 1e-9");
       }},
      {"root_in_open_interval_with_small_residual",
       [](std::mt19937_64&) {
         for (std::size_t k = 1; k <= 20; ++k) {
           const double r = growth_rate(k);
           check(r > 1.0 && r < 2.0, "k=" + std::to_string(k) + " root outside (1, 2)");
           const double residual = std::pow(r, k + 1) - std::pow(r, k) - 1.0;
           check(std::abs(residual) < 1e-10, "k=" + std::to_string(k) + " residual " + std::to_string(residual));
         }
         return std::string("k <= 20");
       }},
  };
}

// ------------------------------------------------------------------- bounds

std::vector<Property> bounds_properties() {
  return {
      {"block_decomposition_meets_best_bound",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 500; ++trial) {
           const std::size_t sigma = uniform(rng, 2, 3);
           const std::size_t k = uniform(rng, 1, 3);
           const Word w = random_word(rng, sigma, uniform(rng, k + 1, 200));
           const auto r = verify_best_bound(w, k, Alphabet(sigma == 2 ? "ab" : "abc"));
           const std::string where = "w=" + w.str() + " k=" + std::to_string(k);
           check(r.ok, where + " achieved " + std::to_string(r.achieved) + " > " + std::to_string(r.bound));
           check(r.finer_ok, where + " achieved " + std::to_string(r.achieved) + " > " + std::to_string(r.finer_bound));
         }
         return std::string("500 words, sigma in {2,3}, k <= 3");
       }},
      {"exact_minimum_meets_best_bound",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 60; ++trial) {
           const std::size_t sigma = uniform(rng, 2, 3);
           const std::size_t k = uniform(rng, 1, 3);
           const Word w = random_word(rng, sigma, uniform(rng, k + 1, 16));
           SearchOptions options;
           options.threads = 1;
           const auto result = search_extremes(w, k, options);
           const auto bound = verify_best_bound(w, k, Alphabet(sigma == 2 ? "ab" : "abc"));
           check(result.min_rho <= bound.bound, "w=" + w.str());
           check(result.min_rho <= bound.achieved, "block beats exact minimum for " + w.str());
           check(result.min_rho <= result.max_rho, "min > max for " + w.str());
         }
         return std::string("60 words, |w| <= 16");
       }},
      {"block_decomposition_shape",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 300; ++trial) {
           const std::size_t p = uniform(rng, 1, 6);
           const Word w = random_word(rng, 2, uniform(rng, p, 60));
           const auto d = block_decomposition(w, p);
           const std::size_t q = w.size() / p, r = w.size() % p;
           check(d.concatenation() == w, "concatenation " + w.str());
           check(d.size() == q, "part count " + w.str());
           for (std::size_t i = 0; i + 1 < d.size(); ++i) check(d.parts()[i].size() == p, "block length " + w.str());
           check(d.parts().back().size() == p + r, "tail length " + w.str());
         }
         return std::string("300 words");
       }},
  };
}

// --------------------------------------------------------------- structural

std::vector<Word> all_words(std::size_t sigma, std::size_t p) {
  std::vector<Word> out;
  std::string s(p, 'a');
  std::size_t total = 1;
  for (std::size_t i = 0; i < p; ++i) total *= sigma;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = p; i-- > 0;) {
      s[i] = static_cast<char>('a' + x % sigma);
      x /= sigma;
    }
    out.emplace_back(s);
  }
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= b;
  return out;
}

Decomposition random_multiset(std::mt19937_64& rng, std::size_t sigma, std::size_t max_parts,
                              std::size_t max_len) {
  std::vector<Word> parts;
  for (std::size_t i = 0, m = uniform(rng, 1, max_parts); i < m; ++i) {
    parts.push_back(random_word(rng, sigma, uniform(rng, 1, max_len)));
  }
  return Decomposition(std::move(parts));
}

std::vector<Property> structural_properties() {
  return {
      {"all_words_pattern_and_transition_count",
       [](std::mt19937_64&) {
         for (std::size_t sigma = 2; sigma <= 3; ++sigma) {
           for (std::size_t p = 1; p <= 4; ++p) {
             std::string block;
             for (std::size_t a = 0; a < sigma; ++a) block.append(p, static_cast<char>('a' + a));
             std::string expected;
             for (std::size_t i = 0; i < ipow(sigma, p - 1); ++i) expected += block;
             const auto l = ebwt(Decomposition(all_words(sigma, p))).l_column;
             const std::string where = " sigma=" + std::to_string(sigma) + " p=" + std::to_string(p);
             check(l.str() == expected, "pattern" + where);
             check(runs(l) == ipow(sigma, p) - 1, "transition count" + where);
           }
         }
         return std::string("sigma in {2,3}, p <= 4; runs = sigma^p - 1");
       }},
      {"equal_length_multiset_bound",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 1000; ++trial) {
           const std::size_t sigma = uniform(rng, 2, 3), p = uniform(rng, 1, 4);
           std::vector<Word> parts;
           for (std::size_t i = 0, m = uniform(rng, 1, 40); i < m; ++i) parts.push_back(random_word(rng, sigma, p));
           const Decomposition d(parts);
           check(rho(d) <= ipow(sigma, p), describe(d));
         }
         return std::string("1000 multisets");
       }},
      {"duplicates_do_not_change_rho",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 1000; ++trial) {
           const auto base = random_multiset(rng, uniform(rng, 2, 3), 6, 7);
           std::vector<Word> with_dups = base.parts();
           for (std::size_t i = 0, extra = uniform(rng, 1, 6); i < extra; ++i) {
             with_dups.push_back(base.parts()[uniform(rng, 0, base.size() - 1)]);
           }
           std::shuffle(with_dups.begin(), with_dups.end(), rng);
           std::set<Word> unique(with_dups.begin(), with_dups.end());
           const Decomposition a(with_dups), b(std::vector<Word>(unique.begin(), unique.end()));
           check(rho(a) == rho(b), describe(a) + " vs " + describe(b));
         }
         return std::string("1000 multisets with forced duplicates");
       }},
      {"removal_changes_rho_by_at_most_twice_length",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 1000; ++trial) {
           auto parts = random_multiset(rng, uniform(rng, 2, 3), 7, 7).parts();
           if (uniform(rng, 0, 2) == 0) parts.push_back(parts[uniform(rng, 0, parts.size() - 1)]);
           if (parts.size() < 2) parts.push_back(random_word(rng, 2, uniform(rng, 1, 7)));
           const std::size_t victim = uniform(rng, 0, parts.size() - 1);
           const Word w = parts[victim];
           const auto multiplicity = std::count(parts.begin(), parts.end(), w);
           const Decomposition a(parts);
           parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(victim));
           const Decomposition b(parts);
           const auto ra = static_cast<long>(rho(a)), rb = static_cast<long>(rho(b));
           if (multiplicity >= 2) {
             check(ra == rb, "duplicate removal changed rho: " + describe(a) + " - " + w.str());
           } else {
             check(ra - rb >= 0 && ra - rb <= 2 * static_cast<long>(w.size()),
                   "removal bound: " + describe(a) + " - " + w.str());
           }
         }
         return std::string("1000 pairs");
       }},
      {"subset_monotonicity",
       [](std::mt19937_64& rng) {
         for (int trial = 0; trial < 1000; ++trial) {
           const auto base = random_multiset(rng, uniform(rng, 2, 3), 8, 7);
           std::set<Word> unique(base.parts().begin(), base.parts().end());
           std::vector<Word> a(unique.begin(), unique.end()), b;
           for (const auto& w : a) {
             if (uniform(rng, 0, 1)) b.push_back(w);
           }
           if (b.empty()) b.push_back(a.front());
           const Decomposition da(a), db(b);
           check(rho(db) <= rho(da), describe(db) + " within " + describe(da));
         }
         return std::string("1000 set pairs");
       }},
  };
}

// ---------------------------------------------------------------- adversary

std::string ba_power(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += "ba";
  return s;
}

std::vector<Property> adversary_properties() {
  return {
      {"cycle_solver_matches_inversion",
       [](std::mt19937_64&) {
         for (std::size_t n = 1; n <= 200; ++n) {
           const auto lengths = ba_cycle_lengths(n);
           const std::set<std::size_t> present(lengths.begin(), lengths.end());
           for (std::size_t k = 2; k <= 8; ++k) {
             check(has_feasible_cycle(n, k) == (present.count(k) == 1),
                   "n=" + std::to_string(n) + " k=" + std::to_string(k));
           }
         }
         return std::string("n <= 200, 2 <= k <= 8");
       }},
      {"no_cycle_of_length_one",
       [](std::mt19937_64&) {
         for (std::size_t n = 1; n <= 300; ++n) {
           check(fixed_point_free(n), "fixed point at n=" + std::to_string(n));
           const auto lengths = ba_cycle_lengths(n);
           check(std::find(lengths.begin(), lengths.end(), 1) == lengths.end(), "n=" + std::to_string(n));
         }
         return std::string("n <= 300");
       }},
      {"length_two_iff_n_is_1_mod_3",
       [](std::mt19937_64&) {
         for (std::size_t n = 1; n <= 300; ++n) {
           const auto lengths = ba_cycle_lengths(n);
           const bool has_two = std::find(lengths.begin(), lengths.end(), 2) != lengths.end();
           check(has_two == (n % 3 == 1), "n=" + std::to_string(n));
         }
         return std::string("n <= 300");
       }},
      {"modulus_forbids_short_cycles",
       [](std::mt19937_64&) {
         std::size_t checked = 0;
         std::size_t modulus = 1;
         for (std::size_t k = 1; k <= 5; ++k) {
           if (k >= 2) modulus *= (std::size_t{1} << k) - 1;
           for (std::size_t n = modulus; n <= 10'000; n += modulus) {
             const auto lengths = ba_cycle_lengths(n);
             check(*std::min_element(lengths.begin(), lengths.end()) > k,
                   "n=" + std::to_string(n) + " k=" + std::to_string(k));
             ++checked;
           }
         }
         return std::to_string(checked) + " (k, n) pairs";
       }},
      {"preimage_conservation_and_rho",
       [](std::mt19937_64&) {
         for (std::size_t n = 1; n <= 200; ++n) {
           const auto fam = preimage_ba(n);
           const auto all = fam.parts.concatenation();
           check(all.size() == 2 * n, "length n=" + std::to_string(n));
           check(std::count(all.str().begin(), all.str().end(), 'a') == static_cast<long>(n), "a count");
           const auto l = ebwt(fam.parts).l_column;
           check(l.str() == ba_power(n), "ebwt(W(n)) != (ba)^n for n=" + std::to_string(n));
           check(runs(l) == 2 * n - 1, "rho n=" + std::to_string(n));
         }
         return std::string("n <= 200");
       }},
      {"preimage_equals_generic_inversion",
       [](std::mt19937_64&) {
         for (std::size_t n = 1; n <= 200; ++n) {
           check(preimage_ba(n).parts == invert_ebwt(Word(ba_power(n))), "n=" + std::to_string(n));
         }
         return std::string("n <= 200");
       }},
      {"alpha_beta_strict_bounds",
       [](std::mt19937_64&) {
         for (std::size_t k = 2; k <= 12; ++k) {
           const std::int64_t top = (std::int64_t{1} << k) - 1;
           for (const auto& s : cycle_solutions(1, k)) {
             for (std::size_t j = 0; j < k; ++j) {
               check(s.alpha[j] > 0 && s.alpha[j] < top && s.beta[j] > 0 && s.beta[j] < top,
                     "k=" + std::to_string(k));
             }
           }
         }
         return std::string("k <= 12");
       }},
      {"worst_family_ratio",
       [](std::mt19937_64&) {
         const auto fam = worst_family(2, 2);
         check(fam.n == 21 && fam.rho == 41 && fam.denominator == 18, "worst_family(2, 2)");
         check(fam.ratio_lower_bound >= Rational(2), "ratio below 2");
         for (std::size_t k = 1; k <= 4; ++k) {
           for (std::size_t m = 0; m <= 3; ++m) {
             const auto f = worst_family(k, m);
             check(rho(f.witness) == 2 * f.n - 1, "rho of witness k=" + std::to_string(k));
             check(f.ratio_lower_bound >= Rational(static_cast<std::int64_t>(m)), "ratio k=" + std::to_string(k));
             for (const auto& p : f.witness.parts()) check(p.size() > k, "short part k=" + std::to_string(k));
           }
         }
         return std::string("n(2,2)=21, k <= 4, M <= 3");
       }},
  };
}

// -------------------------------------------------------------------- artin

std::vector<Property> artin_properties() {
  return {
      {"scan_prefix",
       [](std::mt19937_64&) {
         std::vector<std::uint64_t> expected{2, 4, 10, 12, 18, 28, 36, 52, 58};
         check(artin_scan(58) == expected, "artin_scan(58)");
         // 61 is prime with primitive root 2, so 60 is the next entry.
         expected.push_back(60);
         check(artin_scan(60) == expected, "artin_scan(60)");
         check(artin_scan(1).empty(), "artin_scan(1)");
         return std::string("2 4 10 12 18 28 36 52 58 60");
       }},
      {"single_preimage_iff_artin_candidate_of_length",
       [](std::mt19937_64&) {
         // (ba)^n has length 2n and its LF map is x -> 2x mod (2n+1), so the
         // candidate test applies to the word length, not to n.
         for (std::size_t n = 1; n <= 60; ++n) {
           check((preimage_ba(n).part_count == 1) == artin_candidate(2 * n), "n=" + std::to_string(n));
         }
         for (std::size_t n = 61; n <= 3000; ++n) {
           check((ba_cycle_lengths(n).size() == 1) == artin_candidate(2 * n), "n=" + std::to_string(n));
         }
         return std::string("n <= 3000");
       }},
  };
}

// ---------------------------------------------------------------- circulant

std::vector<Property> circulant_properties() {
  return {
      {"inverse_of_two_s_minus_i",
       [](std::mt19937_64&) {
         for (std::size_t k = 2; k <= 16; ++k) check(verify_circulant_inverse(k), "k=" + std::to_string(k));
         return std::string("2 <= k <= 16");
       }},
      {"circulant_times_shift",
       [](std::mt19937_64& rng) {
         for (std::size_t k = 2; k <= 8; ++k) {
           std::vector<std::int64_t> row(k);
           for (auto& v : row) v = static_cast<std::int64_t>(uniform(rng, 0, 50));
           std::vector<std::int64_t> rotated(k);
           for (std::size_t j = 0; j < k; ++j) rotated[j] = row[(j + k - 1) % k];
           check(circulant(row) * shift_matrix(k) == circulant(rotated), "k=" + std::to_string(k));
         }
         return std::string("k <= 8");
       }},
      {"closed_form_matches_matrix_route",
       [](std::mt19937_64& rng) {
         for (std::size_t k = 2; k <= 8; ++k) {
           std::vector<std::int64_t> powers(k);
           for (std::size_t j = 0; j < k; ++j) powers[j] = std::int64_t{1} << j;
           const auto c = circulant(powers);
           const auto cs = c * shift_matrix(k);
           const std::int64_t n = static_cast<std::int64_t>(uniform(rng, 1, 500));
           for (const auto& sys : cycle_solutions(static_cast<std::size_t>(n), k)) {
             IntMatrix t(k, 1);
             for (std::size_t j = 0; j < k; ++j) t(j, 0) = sys.t[j];
             const auto ct = c * t, cst = cs * t;
             for (std::size_t j = 0; j < k; ++j) {
               const Rational expected(n * ct(j, 0) + cst(j, 0), (std::int64_t{1} << k) - 1);
               check(expected == sys.i[j], "k=" + std::to_string(k) + " n=" + std::to_string(n));
             }
           }
         }
         return std::string("k <= 8");
       }},
  };
}

const std::map<std::string, std::function<std::vector<Property>()>>& registry() {
  static const std::map<std::string, std::function<std::vector<Property>()>> r{
      {"roundtrip", roundtrip_properties}, {"counting", counting_properties},
      {"growth", growth_properties},       {"bounds", bounds_properties},
      {"structural", structural_properties}, {"adversary", adversary_properties},
      {"artin", artin_properties},         {"circulant", circulant_properties},
  };
  return r;
}

void run_into(SuiteReport& report, const std::string& prefix, const std::vector<Property>& props,
              std::uint64_t seed) {
  for (const auto& [name, body] : props) {
    PropertyResult result;
    result.name = prefix + name;
    std::mt19937_64 rng(seed);
    const auto start = std::chrono::steady_clock::now();
    try {
      result.detail = body(rng);
      result.passed = true;
    } catch (const PropertyFailure& f) {
      result.detail = std::string("counterexample: ") + f.what();
    } catch (const std::exception& e) {
      result.detail = std::string("error: ") + e.what();
    }
    result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.properties.push_back(std::move(result));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "counting",  "growth", "bounds", "structural",
                                              "adversary", "artin",     "circulant", "all"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  SuiteReport report;
  report.name = std::string(name);
  if (name == "all") {
    for (const auto& suite : suite_names()) {
      if (suite == "all") continue;
      run_into(report, suite + "/", registry().at(suite)(), seed);
    }
    return report;
  }
  const auto it = registry().find(std::string(name));
  if (it == registry().end()) throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
  run_into(report, "", it->second(), seed);
  return report;
}

}  // namespace ebwtlab
