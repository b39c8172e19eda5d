#include "ebwtlab/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebwtlab {

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return a.size() <=> b.size();
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  std::sort(symbols_.begin(), symbols_.end(), [](char x, char y) {
    return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
  });
  if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
    throw std::invalid_argument("alphabet symbols must be distinct");
  }
}

Alphabet Alphabet::of(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("cannot derive an alphabet from an empty word");
  bool seen[256] = {};
  for (char c : text) seen[static_cast<unsigned char>(c)] = true;
  Alphabet a;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) a.symbols_.push_back(static_cast<char>(c));
  }
  return a;
}

Alphabet Alphabet::of(const std::vector<Word>& words) {
  std::string all;
  for (const auto& w : words) all += w.str();
  return of(all);
}

bool Alphabet::contains(unsigned char symbol) const noexcept {
  return std::binary_search(symbols_.begin(), symbols_.end(), static_cast<char>(symbol),
                            [](char x, char y) {
                              return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
                            });
}

void Alphabet::validate(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!contains(w[i])) {
      throw std::invalid_argument("symbol '" + std::string(1, static_cast<char>(w[i])) +
                                  "' at position " + std::to_string(i) +
                                  " is not in alphabet \"" + symbols_ + "\"");
    }
  }
}

std::size_t runs(std::string_view w) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] != w[i - 1]) ++count;
  }
  return count;
}

Word rotate(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.size();
  std::string s;
  s.reserve(w.size());
  s.append(w.view().substr(offset));
  s.append(w.view().substr(0, offset));
  return Word(std::move(s));
}

std::vector<Word> rotations(const Word& w) {
  if (w.empty()) throw std::invalid_argument("rotations of an empty word are undefined");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotate(w, i));
  return out;
}

RootExp root_exp(const Word& w) {
  if (w.empty()) throw std::invalid_argument("root of an empty word is undefined");
  // Border array; the smallest period is n - border(n).
  const auto s = w.view();
  const std::size_t n = s.size();
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1, b = 0; i < n; ++i) {
    while (b > 0 && s[i] != s[b]) b = border[b];
    if (s[i] == s[b]) ++b;
    border[i + 1] = b;
  }
  const std::size_t period = n - border[n];
  if (n % period != 0) return {w, 1};
  return {Word(s.substr(0, period)), n / period};
}

bool is_primitive(const Word& w) { return root_exp(w).exponent == 1; }

std::size_t least_rotation_offset(std::string_view s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = static_cast<unsigned char>(s[(i + k) % n]);
    const auto b = static_cast<unsigned char>(s[(j + k) % n]);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word least_rotation(const Word& w) { return rotate(w, least_rotation_offset(w.view())); }

std::strong_ordering omega_compare(std::string_view u, std::string_view v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("omega order needs non-empty words");
  // Two infinite periodic words agreeing on |u|+|v| symbols are equal (Fine-Wilf).
  const std::size_t horizon = u.size() + v.size();
  for (std::size_t i = 0, iu = 0, iv = 0; i < horizon; ++i) {
    const auto a = static_cast<unsigned char>(u[iu]);
    const auto b = static_cast<unsigned char>(v[iv]);
    if (a != b) return a <=> b;
    if (++iu == u.size()) iu = 0;
    if (++iv == v.size()) iv = 0;
  }
  return u.size() <=> v.size();
}

std::strong_ordering omega_compare(const Word& u, const Word& v) {
  return omega_compare(u.view(), v.view());
}

}  // namespace ebwtlab
