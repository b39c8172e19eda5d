#include "ebwtlab/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ebwtlab/errors.hpp"

namespace ebwtlab {

std::size_t Composition::sum() const noexcept {
  std::size_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

bool Composition::admissible() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [&](std::size_t p) { return p >= min_part; });
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

Composition Composition::parse(std::string_view text, std::size_t min_part) {
  Composition c;
  c.min_part = min_part;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = std::min(text.find('+', start), text.size());
    const auto piece = text.substr(start, plus - start);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || value == 0) {
      throw std::invalid_argument("malformed composition \"" + std::string(text) + "\"");
    }
    c.parts.push_back(value);
    start = plus + 1;
  }
  return c;
}

namespace {

// Lexicographically least composition of s with parts >= m, appended to out.
void append_least(std::vector<std::size_t>& out, std::size_t s, std::size_t m) {
  while (s >= 2 * m) {
    out.push_back(m);
    s -= m;
  }
  if (s > 0) out.push_back(s);
}

}  // namespace

CompositionStream::CompositionStream(std::size_t n, std::size_t k) : min_part_(k + 1) {
  if (n < min_part_) {
    done_ = true;
    return;
  }
  append_least(current_, n, min_part_);
}

bool CompositionStream::next(Composition& out) {
  if (done_) return false;
  if (started_) {
    // The successor always differs first at the second-to-last part.
    if (current_.size() < 2) {
      done_ = true;
      return false;
    }
    const std::size_t tail = current_.back();
    current_.pop_back();
    if (tail - 1 >= min_part_) {
      ++current_.back();
      append_least(current_, tail - 1, min_part_);
    } else {
      current_.back() += tail;
    }
  }
  started_ = true;
  out.parts = current_;
  out.min_part = min_part_;
  return true;
}

std::vector<Composition> enumerate_compositions(std::size_t n, std::size_t k) {
  std::vector<Composition> out;
  CompositionStream stream(n, k);
  Composition c;
  while (stream.next(c)) out.push_back(c);
  return out;
}

BigInt generalized_fibonacci(std::size_t c, std::size_t n) {
  if (c == 0) throw std::invalid_argument("generalized Fibonacci needs c >= 1");
  if (n < c) return 1;
  // Sliding window over the last c values.
  std::vector<BigInt> window(c, BigInt(1));
  std::size_t head = 0;  // index of G_{m-c} for the next m
  for (std::size_t m = c; m <= n; ++m) {
    const BigInt& previous = window[(head + c - 1) % c];
    BigInt value = previous + window[head];
    window[head] = std::move(value);
    head = (head + 1) % c;
  }
  return window[(head + c - 1) % c];
}

BigInt count_decompositions(std::size_t n, std::size_t k) {
  if (n < k + 1) {
    throw std::invalid_argument("no " + std::to_string(k) + "-restricted decomposition of a word of length " +
                                std::to_string(n));
  }
  return generalized_fibonacci(k + 1, n - (k + 1));
}

double growth_rate(std::size_t k) {
  if (k < 1) throw std::invalid_argument("growth rate needs k >= 1");
  const auto f = [k](double x) {
    double xk = 1.0;
    for (std::size_t i = 0; i < k; ++i) xk *= x;
    return xk * (x - 1.0) - 1.0;
  };
  double lo = 1.0, hi = 2.0;  // f(1) = -1 < 0 < 2^k - 1 = f(2)
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Decomposition apply_composition(const Word& w, const Composition& c) {
  if (c.sum() != w.size()) {
    throw std::invalid_argument("composition " + c.to_string() + " sums to " + std::to_string(c.sum()) +
                                " but the word has length " + std::to_string(w.size()));
  }
  std::vector<Word> parts;
  parts.reserve(c.parts.size());
  std::size_t at = 0;
  for (auto len : c.parts) {
    parts.emplace_back(w.view().substr(at, len));
    at += len;
  }
  return Decomposition(std::move(parts));
}

namespace {

struct Extremes {
  std::size_t min_rho = std::numeric_limits<std::size_t>::max();
  Composition min_witness;
  std::size_t max_rho = 0;
  Composition max_witness;
  bool any = false;
  std::uint64_t explored = 0;

  void offer(std::size_t r, const Composition& c) {
    ++explored;
    if (!any) {
      min_rho = max_rho = r;
      min_witness = max_witness = c;
      any = true;
      return;
    }
    if (r < min_rho || (r == min_rho && c < min_witness)) {
      min_rho = r;
      min_witness = c;
    }
    if (r > max_rho || (r == max_rho && c < max_witness)) {
      max_rho = r;
      max_witness = c;
    }
  }

  void merge(const Extremes& other) {
    explored += other.explored;
    if (!other.any) return;
    if (!any) {
      const auto e = explored;
      *this = other;
      explored = e;
      return;
    }
    if (other.min_rho < min_rho || (other.min_rho == min_rho && other.min_witness < min_witness)) {
      min_rho = other.min_rho;
      min_witness = other.min_witness;
    }
    if (other.max_rho > max_rho || (other.max_rho == max_rho && other.max_witness < max_witness)) {
      max_rho = other.max_rho;
      max_witness = other.max_witness;
    }
  }
};

}  // namespace

SearchResult search_extremes(const Word& w, std::size_t k, const SearchOptions& options) {
  const std::size_t n = w.size();
  const BigInt count = count_decompositions(n, k);
  if (count > options.limit) {
    throw GuardExceeded("search space has " + count.str() + " decompositions, above the limit of " +
                        options.limit.str());
  }

  const std::size_t m = k + 1;
  // The space is partitioned by first part; each shard is enumerated in
  // lexicographic order and the reduction is order independent.
  std::vector<std::size_t> first_parts;
  for (std::size_t t = m; t <= n; ++t) {
    if (n - t == 0 || n - t >= m) first_parts.push_back(t);
  }

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, first_parts.size()));

  std::atomic<std::size_t> cursor{0};
  std::mutex mutex;
  Extremes total;
  std::exception_ptr failure;

  const auto worker = [&] {
    Extremes local;
    try {
      Composition c;
      c.min_part = m;
      for (std::size_t idx; (idx = cursor.fetch_add(1)) < first_parts.size();) {
        const std::size_t head = first_parts[idx];
        const auto evaluate = [&](const Composition& comp) {
          if (options.stop.stop_requested()) throw Cancelled();
          local.offer(rho(apply_composition(w, comp)), comp);
        };
        if (head == n) {
          c.parts.assign(1, head);
          evaluate(c);
          continue;
        }
        CompositionStream rest(n - head, k);
        Composition tail;
        while (rest.next(tail)) {
          c.parts.assign(1, head);
          c.parts.insert(c.parts.end(), tail.parts.begin(), tail.parts.end());
          evaluate(c);
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
      return;
    }
    std::lock_guard lock(mutex);
    total.merge(local);
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  SearchResult result;
  result.word = w;
  result.k = k;
  result.count_explored = total.explored;
  result.min_rho = total.min_rho;
  result.min_witness = total.min_witness;
  result.max_rho = total.max_rho;
  result.max_witness = total.max_witness;
  result.baseline_rho = runs(bwt(w));
  return result;
}

Decomposition block_decomposition(const Word& w, std::size_t p) {
  if (p == 0) throw std::invalid_argument("block length must be positive");
  if (w.size() < p) {
    throw std::invalid_argument("word of length " + std::to_string(w.size()) + " is shorter than block length " +
                                std::to_string(p));
  }
  const std::size_t q = w.size() / p;
  Composition c;
  c.min_part = p;
  c.parts.assign(q - 1, p);
  c.parts.push_back(w.size() - (q - 1) * p);
  return apply_composition(w, c);
}

namespace {

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

}  // namespace

BestBoundCheck verify_best_bound(const Word& w, std::size_t k, const std::optional<Alphabet>& alphabet) {
  if (w.size() < k + 1) {
    throw std::invalid_argument("word of length " + std::to_string(w.size()) + " has no " + std::to_string(k) +
                                "-restricted decomposition");
  }
  const Alphabet sigma = alphabet ? *alphabet : Alphabet::of(w.view());
  sigma.validate(w);

  const std::size_t p = k + 1;
  const std::size_t r = w.size() % p;
  BestBoundCheck out;
  out.sigma = sigma.size();
  const std::size_t power = saturating_pow(out.sigma, p);
  out.bound = saturating_add(power, 4 * k + 2);
  out.finer_bound = saturating_add(power, 2 * (p + r));
  out.achieved = rho(block_decomposition(w, p));
  out.ok = out.achieved <= out.bound;
  out.finer_ok = out.achieved <= out.finer_bound;
  return out;
}

Decomposition lyndon_factorization(const Word& w) {
  if (w.empty()) throw std::invalid_argument("Lyndon factorization of an empty word is undefined");
  const auto s = w.view();
  const std::size_t n = s.size();
  std::vector<Word> parts;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && static_cast<unsigned char>(s[k]) <= static_cast<unsigned char>(s[j])) {
      k = static_cast<unsigned char>(s[k]) < static_cast<unsigned char>(s[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      parts.emplace_back(s.substr(i, j - k));
      i += j - k;
    }
  }
  return Decomposition(std::move(parts));
}

bool is_lyndon(const Word& w) {
  return !w.empty() && least_rotation_offset(w.view()) == 0 && is_primitive(w);
}

}  // namespace ebwtlab
