#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "engel/errors.hpp"

namespace engel {

/// Monic monomial of the free associative algebra: a non-empty sequence of
/// generator indices. Degree and per-generator degree are cached.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters, int generator_count);

  int degree() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  const std::vector<int>& multidegree() const { return multidegree_; }
  int degree_in(int generator) const { return multidegree_.at(generator); }

  /// Concatenation; both words must be over the same alphabet size.
  Word operator*(const Word& o) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

  /// Canonical order: total degree, then lexicographic by generator index.
  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_ <=> o.letters_;
  }

  /// Render in star/caret syntax, e.g. "y*x*y^3*x*y".
  std::string str(const std::vector<std::string>& generator_names) const;

private:
  std::vector<std::uint8_t> letters_;
  std::vector<int> multidegree_;
};

/// Contiguous-subword test: true iff n = m1 * m * m2 with m1, m2 possibly
/// empty.
bool word_divides(const Word& m, const Word& n);

} // namespace engel
