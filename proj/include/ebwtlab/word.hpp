#pragma once

// Words over a finite ordered byte alphabet: runs, rotations, roots and the
// omega order used to sort rotations of words with different lengths.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ebwtlab {

/// A finite sequence of 8-bit symbols. Symbols compare as unsigned bytes.
class Word {
 public:
  Word() = default;
  explicit Word(std::string symbols) : symbols_(std::move(symbols)) {}
  explicit Word(std::string_view symbols) : symbols_(symbols) {}
  explicit Word(const char* symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned char operator[](std::size_t i) const noexcept {
    return static_cast<unsigned char>(symbols_[i]);
  }

  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Plain lexicographic order on unsigned bytes.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::string symbols_;
};

/// Ordered set of distinct symbols. The order is the byte order; declaring
/// "ba" yields the same alphabet as "ab".
class Alphabet {
 public:
  /// Throws std::invalid_argument on an empty or duplicated symbol list.
  explicit Alphabet(std::string_view symbols);

  /// Sorted distinct symbols of `text`; throws if `text` is empty.
  static Alphabet of(std::string_view text);
  static Alphabet of(const std::vector<Word>& words);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  bool contains(unsigned char symbol) const noexcept;

  /// Throws std::invalid_argument naming the first foreign symbol.
  void validate(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet() = default;
  std::string symbols_;
};

struct RootExp {
  Word root;
  std::size_t exponent = 1;
};

/// Number of adjacent unequal pairs (blocks - 1); 0 for empty words.
std::size_t runs(std::string_view w) noexcept;
inline std::size_t runs(const Word& w) noexcept { return runs(w.view()); }

/// All |w| rotations in shift order, duplicates included.
std::vector<Word> rotations(const Word& w);

RootExp root_exp(const Word& w);
bool is_primitive(const Word& w);

/// Offset of the lexicographically least rotation (first one on ties).
std::size_t least_rotation_offset(std::string_view w);
Word least_rotation(const Word& w);
Word rotate(const Word& w, std::size_t offset);

/// Compares u^omega with v^omega over |u|+|v| symbols, then shorter first.
/// Equal only for identical words.
std::strong_ordering omega_compare(std::string_view u, std::string_view v);
std::strong_ordering omega_compare(const Word& u, const Word& v);

struct OmegaLess {
  bool operator()(const Word& u, const Word& v) const {
    return omega_compare(u, v) < 0;
  }
};

}  // namespace ebwtlab
