#include "engel/word.hpp"

#include <algorithm>

namespace engel {

Word::Word(std::vector<std::uint8_t> letters, int generator_count)
    : letters_(std::move(letters)), multidegree_(generator_count, 0) {
  if (letters_.empty()) throw domain_error("a word must have degree >= 1");
  for (auto g : letters_) {
    if (g >= generator_count) throw domain_error("letter outside the generator alphabet");
    ++multidegree_[g];
  }
}

Word Word::operator*(const Word& o) const {
  if (multidegree_.size() != o.multidegree_.size())
    throw domain_error("concatenation of words over different alphabets");
  std::vector<std::uint8_t> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(cat), static_cast<int>(multidegree_.size()));
}

std::string Word::str(const std::vector<std::string>& generator_names) const {
  std::string s;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!s.empty()) s += "*";
    s += generator_names.at(letters_[i]);
    if (j - i > 1) { s += "^"; s += std::to_string(j - i); }
    i = j;
  }
  return s;
}

bool word_divides(const Word& m, const Word& n) {
  const auto& a = m.letters();
  const auto& b = n.letters();
  if (a.size() > b.size()) return false;
  return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
}

} // namespace engel
