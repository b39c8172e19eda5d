#include "ebwtlab/transform.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace ebwtlab {

Decomposition::Decomposition(std::vector<Word> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.empty()) throw std::invalid_argument("decomposition parts must be non-empty");
    total_length_ += p.size();
  }
}

Decomposition Decomposition::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decomposition");
  std::vector<Word> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (piece.empty()) throw std::invalid_argument("empty part in \"" + std::string(text) + "\"");
    parts.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Decomposition(std::move(parts));
}

std::string Decomposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += parts_[i].str();
  }
  return out;
}

Word Decomposition::concatenation() const {
  std::string out;
  out.reserve(total_length_);
  for (const auto& p : parts_) out += p.str();
  return Word(std::move(out));
}

Word EbwtResult::f_column() const {
  std::string f = l_column.str();
  std::sort(f.begin(), f.end(), [](char x, char y) {
    return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
  });
  return Word(std::move(f));
}

namespace {

struct RotationRef {
  std::uint32_t part;
  std::uint32_t offset;
};

// Rotations sorted by omega order, stable in (part, offset).
std::vector<RotationRef> sorted_rotations(const Decomposition& d) {
  if (d.empty()) throw std::invalid_argument("eBWT of an empty decomposition is undefined");
  std::vector<RotationRef> rows;
  rows.reserve(d.total_length());
  for (std::uint32_t p = 0; p < d.size(); ++p) {
    for (std::uint32_t o = 0; o < d.parts()[p].size(); ++o) rows.push_back({p, o});
  }
  const auto& parts = d.parts();
  std::stable_sort(rows.begin(), rows.end(), [&](RotationRef x, RotationRef y) {
    const std::string_view u = parts[x.part].view();
    const std::string_view v = parts[y.part].view();
    const std::size_t horizon = u.size() + v.size();
    std::size_t iu = x.offset, iv = y.offset;
    for (std::size_t i = 0; i < horizon; ++i) {
      const auto a = static_cast<unsigned char>(u[iu]);
      const auto b = static_cast<unsigned char>(v[iv]);
      if (a != b) return a < b;
      if (++iu == u.size()) iu = 0;
      if (++iv == v.size()) iv = 0;
    }
    return u.size() < v.size();
  });
  return rows;
}

unsigned char last_symbol(const Decomposition& d, RotationRef r) {
  const Word& w = d.parts()[r.part];
  return w[(r.offset + w.size() - 1) % w.size()];
}

}  // namespace

EbwtResult ebwt(const Decomposition& parts) {
  const auto rows = sorted_rotations(parts);
  std::string l;
  l.reserve(rows.size());
  for (auto r : rows) l.push_back(static_cast<char>(last_symbol(parts, r)));
  return {Word(std::move(l))};
}

Word bwt(const Word& w) {
  if (w.empty()) throw std::invalid_argument("BWT of an empty word is undefined");
  return ebwt(Decomposition({w})).l_column;
}

std::vector<MatrixRow> ebwt_matrix(const Decomposition& parts) {
  const auto rows = sorted_rotations(parts);
  std::vector<MatrixRow> out;
  out.reserve(rows.size());
  for (auto r : rows) {
    out.push_back({rotate(parts.parts()[r.part], r.offset), last_symbol(parts, r)});
  }
  return out;
}

Decomposition canonical_form(const Decomposition& parts) {
  std::vector<Word> out;
  out.reserve(parts.size());
  for (const auto& p : parts.parts()) out.push_back(least_rotation(p));
  std::stable_sort(out.begin(), out.end(), OmegaLess{});
  return Decomposition(std::move(out));
}

Decomposition invert_ebwt(const Word& l) {
  if (l.empty()) throw std::invalid_argument("cannot invert an empty transform");
  const std::size_t n = l.size();

  // F[j] cyclically follows L[j]; the i-th `a` of F is the i-th `a` of L.
  // next[j] is the row whose L symbol is the occurrence sitting at F[j].
  std::array<std::size_t, 257> first{};
  for (std::size_t i = 0; i < n; ++i) ++first[l[i] + 1];
  for (std::size_t c = 1; c < first.size(); ++c) first[c] += first[c - 1];
  std::string f(n, '\0');
  std::vector<std::size_t> next(n);
  auto fill = first;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t row = fill[l[j]]++;
    f[row] = static_cast<char>(l[j]);
    next[row] = j;
  }

  std::vector<bool> seen(n, false);
  std::vector<Word> parts;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::string cycle;
    for (std::size_t j = start; !seen[j]; j = next[j]) {
      seen[j] = true;
      cycle.push_back(f[j]);
    }
    parts.push_back(least_rotation(Word(std::move(cycle))));
  }
  std::stable_sort(parts.begin(), parts.end(), OmegaLess{});
  return Decomposition(std::move(parts));
}

std::size_t rho(const Decomposition& parts) { return ebwt(parts).runs(); }

}  // namespace ebwtlab
