#pragma once

// Preimages of (ba)^n under the eBWT and the worst-case family built on them.
//
// With L = (ba)^n and F = a^n b^n (1-based), a_i sits at F-row i and L-row 2i,
// b_i at F-row n+i and L-row 2i-1. Following the occurrence in F-row j back to
// its L-row gives the permutation j -> 2j (j <= n), j -> 2(j-n)-1 (j > n); its
// cycles are the words of W(n).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ebwtlab/transform.hpp"
#include "ebwtlab/word.hpp"

namespace ebwtlab {

using Rational = boost::rational<std::int64_t>;

struct PreimageFamily {
  std::size_t n = 0;
  Decomposition parts;  // canonical rotations, omega-sorted
  std::size_t min_part_length = 0;
  std::size_t part_count = 0;
};

/// W(n) by cycle-decomposing the explicit permutation above. Requires n >= 1.
PreimageFamily preimage_ba(std::size_t n);

/// Cycle lengths of the (ba)^n permutation in order of smallest start row.
std::vector<std::size_t> ba_cycle_lengths(std::size_t n);

struct CycleSystem {
  std::size_t k = 0;
  std::vector<int> t;  // t_1 = 0, t_k = 1
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> beta;
  std::vector<Rational> i;
  bool feasible = false;
};

/// All 2^{k-2} candidate length-k cycles through a_{i_1} -> ... -> b_{i_k}
/// with indices solved exactly as i_j = (alpha_j n + beta_j) / (2^k - 1).
/// Requires n >= 1 and 2 <= k <= 30.
std::vector<CycleSystem> cycle_solutions(std::size_t n, std::size_t k);

bool has_feasible_cycle(std::size_t n, std::size_t k);

/// True iff the (ba)^n permutation has no fixed point, checked row by row.
bool fixed_point_free(std::size_t n);

struct WorstFamily {
  std::size_t k = 0;
  std::size_t n = 0;
  std::int64_t modulus = 1;      // prod_{k'=2}^{k} (2^{k'} - 1)
  std::size_t denominator = 0;   // 2^{k+1} + 4k + 2
  std::size_t rho = 0;           // 2n - 1
  Word word;                     // concatenation of W(n)
  Decomposition witness;         // W(n), every part longer than k
  Rational ratio_lower_bound;    // (2n - 1) / denominator
};

/// Smallest n that is a multiple of the modulus with 2n - 1 >= M * denominator.
/// Throws GuardExceeded if n would exceed max_n.
WorstFamily worst_family(std::size_t k, std::size_t m, std::size_t max_n = 10'000'000);

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix identity_matrix(std::size_t k);
/// S(i, i+1 mod k) = 1.
IntMatrix shift_matrix(std::size_t k);
/// Entry (i, j) = first_row[(j - i) mod k].
IntMatrix circulant(const std::vector<std::int64_t>& first_row);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(std::int64_t s, const IntMatrix& a);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// (2S - I) * C(1, 2, ..., 2^{k-1}) == (2^k - 1) I. Requires 2 <= k <= 62.
bool verify_circulant_inverse(std::size_t k);

/// n + 1 is an odd prime and 2 has multiplicative order n modulo n + 1.
bool artin_candidate(std::uint64_t n);
std::vector<std::uint64_t> artin_scan(std::uint64_t limit);

}  // namespace ebwtlab
