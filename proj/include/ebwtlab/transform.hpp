#pragma once

// BWT and extended BWT (eBWT) over multisets of words.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ebwtlab/word.hpp"

namespace ebwtlab {

/// Ordered list of non-empty words, duplicates allowed.
class Decomposition {
 public:
  Decomposition() = default;
  /// Throws std::invalid_argument if any part is empty.
  explicit Decomposition(std::vector<Word> parts);

  /// Parses "baa,bab". Throws on empty input or empty parts.
  static Decomposition parse(std::string_view text);

  const std::vector<Word>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t total_length() const noexcept { return total_length_; }

  /// Parts joined by ','.
  std::string to_string() const;
  /// Concatenation of all parts in order.
  Word concatenation() const;

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Word> parts_;
  std::size_t total_length_ = 0;
};

struct EbwtResult {
  Word l_column;

  /// Symbols of L sorted ascending.
  Word f_column() const;
  std::size_t runs() const noexcept { return ebwtlab::runs(l_column); }
};

struct MatrixRow {
  Word rotation;
  unsigned char last = 0;
};

Word bwt(const Word& w);

/// Last symbols of all rotations of all parts sorted by omega order. Ties
/// between identical rotations keep input order (part, then offset).
EbwtResult ebwt(const Decomposition& parts);

std::vector<MatrixRow> ebwt_matrix(const Decomposition& parts);

/// Multiset of primitive words whose eBWT is `l`, each emitted as its least
/// rotation, sorted by omega order. Every non-empty word has a preimage.
Decomposition invert_ebwt(const Word& l);

/// runs(ebwt(parts)).
std::size_t rho(const Decomposition& parts);

/// Each part replaced by its least rotation, then parts sorted by omega order.
/// Two multisets of primitive words are conjugate-equal iff their canonical
/// forms are equal.
Decomposition canonical_form(const Decomposition& parts);

}  // namespace ebwtlab
