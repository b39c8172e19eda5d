#pragma once

// k-restricted decompositions: compositions of |w| with parts > k, their
// counts, exhaustive extremal search, and two named constructions (the
// equal-block split and the Lyndon factorization).

#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ebwtlab/transform.hpp"
#include "ebwtlab/word.hpp"

namespace ebwtlab {

using BigInt = boost::multiprecision::cpp_int;

struct Composition {
  std::vector<std::size_t> parts;
  std::size_t min_part = 1;

  std::size_t sum() const noexcept;
  bool admissible() const noexcept;
  /// "2+2+2"
  std::string to_string() const;
  /// Parses "2+2+2". Throws std::invalid_argument on malformed input.
  static Composition parse(std::string_view text, std::size_t min_part = 1);

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts <=> b.parts; }
};

/// Single-pass stream of the compositions of n into parts >= k + 1, in
/// lexicographic order of the part lists.
class CompositionStream {
 public:
  CompositionStream(std::size_t n, std::size_t k);

  /// Returns false once exhausted.
  bool next(Composition& out);

 private:
  std::size_t min_part_;
  std::vector<std::size_t> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Composition> enumerate_compositions(std::size_t n, std::size_t k);

/// G^c_n: G_0 = ... = G_{c-1} = 1, G_n = G_{n-1} + G_{n-c}.
BigInt generalized_fibonacci(std::size_t c, std::size_t n);

/// |D_k(w)| for |w| = n, i.e. G^{k+1}_{n-(k+1)}. Throws if n < k + 1.
BigInt count_decompositions(std::size_t n, std::size_t k);

/// Real root > 1 of X^{k+1} - X^k - 1, to 1e-12. Requires k >= 1.
double growth_rate(std::size_t k);

/// Throws std::invalid_argument if the parts do not sum to |w|.
Decomposition apply_composition(const Word& w, const Composition& c);

struct SearchOptions {
  BigInt limit = 2'000'000;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::stop_token stop;
};

struct SearchResult {
  Word word;
  std::size_t k = 0;
  BigInt count_explored;
  std::size_t min_rho = 0;
  Composition min_witness;
  std::size_t max_rho = 0;
  Composition max_witness;
  std::size_t baseline_rho = 0;
};

/// Exact min and max of rho over D_k(w). Ties go to the lexicographically
/// least composition. Throws GuardExceeded when the space is larger than
/// options.limit and Cancelled when options.stop fires.
SearchResult search_extremes(const Word& w, std::size_t k, const SearchOptions& options = {});

/// q - 1 blocks of length p, then one block of length p + r (n = pq + r).
/// When |w| < 2p the result is the single part w.
Decomposition block_decomposition(const Word& w, std::size_t p);

struct BestBoundCheck {
  std::size_t sigma = 0;
  std::size_t bound = 0;        // sigma^{k+1} + 4k + 2
  std::size_t finer_bound = 0;  // sigma^{k+1} + 2(k + 1 + r)
  std::size_t achieved = 0;     // rho(block_decomposition(w, k + 1))
  bool ok = false;
  bool finer_ok = false;
};

/// Uses the sorted distinct symbols of w as the alphabet unless one is given.
BestBoundCheck verify_best_bound(const Word& w, std::size_t k,
                                 const std::optional<Alphabet>& alphabet = std::nullopt);

/// Duval factorization into non-increasing Lyndon words.
Decomposition lyndon_factorization(const Word& w);
bool is_lyndon(const Word& w);

}  // namespace ebwtlab
