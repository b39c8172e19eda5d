#include "ebwtlab/adversary.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "ebwtlab/errors.hpp"

namespace ebwtlab {

namespace {

// 0-based row r in [0, 2n): the L-row holding the occurrence found at F-row r.
inline std::size_t ba_successor(std::size_t r, std::size_t n) {
  return r < n ? 2 * r + 1 : 2 * (r - n);
}

void require_positive(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

}  // namespace

std::vector<std::size_t> ba_cycle_lengths(std::size_t n) {
  require_positive(n);
  std::vector<bool> seen(2 * n, false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t r = start; !seen[r]; r = ba_successor(r, n)) {
      seen[r] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

PreimageFamily preimage_ba(std::size_t n) {
  require_positive(n);
  std::vector<bool> seen(2 * n, false);
  std::vector<Word> parts;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    std::string cycle;
    for (std::size_t r = start; !seen[r]; r = ba_successor(r, n)) {
      seen[r] = true;
      cycle.push_back(r < n ? 'a' : 'b');
    }
    parts.push_back(least_rotation(Word(std::move(cycle))));
  }
  std::stable_sort(parts.begin(), parts.end(), OmegaLess{});

  PreimageFamily out;
  out.n = n;
  out.part_count = parts.size();
  out.min_part_length = std::numeric_limits<std::size_t>::max();
  for (const auto& p : parts) out.min_part_length = std::min(out.min_part_length, p.size());
  out.parts = Decomposition(std::move(parts));
  return out;
}

std::vector<CycleSystem> cycle_solutions(std::size_t n, std::size_t k) {
  require_positive(n);
  if (k < 2) throw std::invalid_argument("cycle length must be at least 2; length 1 is covered by fixed_point_free");
  if (k > 30) throw GuardExceeded("cycle length " + std::to_string(k) + " exceeds the supported maximum of 30");
  if (n > (std::size_t{1} << 31)) throw GuardExceeded("n exceeds the exact-arithmetic range of the cycle solver");

  const std::int64_t modulus = (std::int64_t{1} << k) - 1;
  const std::size_t free_bits = k - 2;
  std::vector<CycleSystem> out;
  out.reserve(std::size_t{1} << free_bits);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
    CycleSystem sys;
    sys.k = k;
    sys.t.assign(k, 0);
    sys.t[k - 1] = 1;
    for (std::size_t b = 0; b < free_bits; ++b) {
      sys.t[1 + b] = static_cast<int>((mask >> (free_bits - 1 - b)) & 1);
    }

    sys.alpha.assign(k, 0);
    sys.beta.assign(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!sys.t[l]) continue;
        sys.alpha[j] += std::int64_t{1} << ((l + k - j) % k);
        sys.beta[j] += std::int64_t{1} << ((l + 2 * k - j - 1) % k);
      }
    }

    bool feasible = true;
    std::set<std::int64_t> a_indices, b_indices;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational value(sys.alpha[j] * static_cast<std::int64_t>(n) + sys.beta[j], modulus);
      sys.i.push_back(value);
      if (value.denominator() != 1) {
        feasible = false;
        continue;
      }
      const std::int64_t idx = value.numerator();
      if (idx < 1 || idx > static_cast<std::int64_t>(n)) feasible = false;
      auto& bucket = sys.t[j] ? b_indices : a_indices;
      if (!bucket.insert(idx).second) feasible = false;
    }
    sys.feasible = feasible;
    out.push_back(std::move(sys));
  }
  return out;
}

bool has_feasible_cycle(std::size_t n, std::size_t k) {
  const auto systems = cycle_solutions(n, k);
  return std::any_of(systems.begin(), systems.end(), [](const CycleSystem& s) { return s.feasible; });
}

bool fixed_point_free(std::size_t n) {
  require_positive(n);
  for (std::size_t r = 0; r < 2 * n; ++r) {
    if (ba_successor(r, n) == r) return false;
  }
  return true;
}

WorstFamily worst_family(std::size_t k, std::size_t m, std::size_t max_n) {
  if (k < 1) throw std::invalid_argument("worst family needs k >= 1");
  if (k > 20) throw GuardExceeded("k = " + std::to_string(k) + " exceeds the supported maximum of 20");

  WorstFamily out;
  out.k = k;
  for (std::size_t kk = 2; kk <= k; ++kk) {
    const std::int64_t factor = (std::int64_t{1} << kk) - 1;
    if (out.modulus > std::numeric_limits<std::int64_t>::max() / factor) {
      throw GuardExceeded("modulus for k = " + std::to_string(k) + " overflows 64 bits");
    }
    out.modulus *= factor;
  }
  // Binary family: sigma = 2.
  out.denominator = (std::size_t{1} << (k + 1)) + 4 * k + 2;

  const std::size_t mod = static_cast<std::size_t>(out.modulus);
  if (m > (max_n * 2) / out.denominator + 1) {
    throw GuardExceeded("ratio " + std::to_string(m) + " needs n above the limit of " + std::to_string(max_n));
  }
  const std::size_t needed = std::max<std::size_t>(1, (m * out.denominator + 2) / 2);  // 2n - 1 >= M*D
  const std::size_t n = (needed + mod - 1) / mod * mod;
  if (n > max_n) {
    throw GuardExceeded("smallest admissible n = " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(max_n));
  }

  auto family = preimage_ba(n);
  if (family.min_part_length <= k) {
    throw std::logic_error("W(" + std::to_string(n) + ") has a part of length " +
                           std::to_string(family.min_part_length) + " <= k");
  }
  out.n = n;
  out.rho = 2 * n - 1;
  out.word = family.parts.concatenation();
  out.witness = std::move(family.parts);
  out.ratio_lower_bound = Rational(static_cast<std::int64_t>(out.rho), static_cast<std::int64_t>(out.denominator));
  return out;
}

IntMatrix identity_matrix(std::size_t k) {
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 1;
  return out;
}

IntMatrix shift_matrix(std::size_t k) {
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) out(i, (i + 1) % k) = 1;
  return out;
}

IntMatrix circulant(const std::vector<std::int64_t>& first_row) {
  const std::size_t k = first_row.size();
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = first_row[(j + k - i) % k];
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t l = 0; l < a.cols; ++l) {
      const std::int64_t x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& v : out.data) v *= s;
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

bool verify_circulant_inverse(std::size_t k) {
  if (k < 2) throw std::invalid_argument("circulant check needs k >= 2");
  if (k > 62) throw GuardExceeded("k = " + std::to_string(k) + " exceeds 64-bit exact range");
  std::vector<std::int64_t> powers(k);
  for (std::size_t j = 0; j < k; ++j) powers[j] = std::int64_t{1} << j;
  const IntMatrix lhs = (2 * shift_matrix(k) - identity_matrix(k)) * circulant(powers);
  const std::int64_t scale = (std::int64_t{1} << k) - 1;
  return lhs == scale * identity_matrix(k);
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool artin_candidate(std::uint64_t n) {
  if (n < 1 || n >= std::numeric_limits<std::uint64_t>::max()) return false;
  const std::uint64_t p = n + 1;
  if (!is_odd_prime(p)) return false;
  for (auto q : distinct_prime_factors(n)) {
    if (pow_mod(2, n / q, p) == 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> artin_scan(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (artin_candidate(n)) out.push_back(n);
  }
  return out;
}

}  // namespace ebwtlab
