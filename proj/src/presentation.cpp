#include "engel/presentation.hpp"

#include <algorithm>

namespace engel {

std::optional<int> PresentationSpec::degree_bound() const {
  std::optional<int> bound;
  for (const auto& clause : relations)
    if (auto* cap = std::get_if<DegreeCap>(&clause))
      bound = bound ? std::min(*bound, cap->min_total_degree) : cap->min_total_degree;
  return bound;
}

bool PresentationSpec::has_polynomial_relations() const {
  for (const auto& clause : relations)
    if (std::holds_alternative<ExplicitPolynomial>(clause)) return true;
  return false;
}

PresentationSpec PresentationSpec::monomial_part() const {
  PresentationSpec out;
  out.generators = generators;
  out.characteristic = characteristic;
  for (const auto& clause : relations)
    if (!std::holds_alternative<ExplicitPolynomial>(clause)) out.relations.push_back(clause);
  return out;
}

namespace {

// Walks the contiguous subwords of one length; pred(sub) true for any window
// makes the word a multiple of a clause instance.
template <class Pred>
bool any_window(const Word& w, int length, int alphabet, Pred&& pred) {
  const auto& l = w.letters();
  for (std::size_t i = 0; i + length <= l.size(); ++i) {
    Word sub(std::vector<std::uint8_t>(l.begin() + i, l.begin() + i + length), alphabet);
    if (pred(sub)) return true;
  }
  return false;
}

} // namespace

// Membership in the monomial ideal: w is a multiple of some clause-instance
// monomial. Degree caps are closed under multiples by themselves; the slice
// and divisor clauses need a contiguous-subword walk. (Non-division is
// inherited by extensions, so one window length per clause suffices.)
bool PresentationSpec::monomial_member(const Word& w) const {
  if (w.multidegree().size() != generators.size())
    throw domain_error("word over a foreign generator alphabet");
  const int alphabet = generator_count();
  for (const auto& clause : relations) {
    if (auto* cap = std::get_if<DegreeCap>(&clause)) {
      if (w.degree() >= cap->min_total_degree) return true;
    } else if (auto* gcap = std::get_if<GeneratorDegreeCap>(&clause)) {
      if (w.degree_in(gcap->generator) >= gcap->min_degree) return true;
    } else if (auto* slice = std::get_if<DegreeSliceExcept>(&clause)) {
      if (w.degree() >= slice->degree &&
          any_window(w, slice->degree, alphabet, [&](const Word& sub) {
            return std::find(slice->kept_words.begin(), slice->kept_words.end(), sub) ==
                   slice->kept_words.end();
          }))
        return true;
    } else if (auto* div = std::get_if<DivisorSupport>(&clause)) {
      int window = std::min(w.degree(), div->max_degree);
      if (any_window(w, window, alphabet, [&](const Word& sub) {
            for (const auto& s : div->support_words)
              if (word_divides(sub, s)) return false;
            return true;
          }))
        return true;
    }
  }
  return false;
}

std::vector<Word> PresentationSpec::survivors() const {
  auto bound = degree_bound();
  if (!bound) throw domain_error("unbounded presentation: no degree_cap clause");
  const int gens = generator_count();
  if (gens < 1) throw domain_error("presentation without generators");

  // Words of degree d survive only if some degree of them is below the cap;
  // enumerate every word of degree < bound via an odometer.
  double total = 0;
  double level = 1;
  for (int d = 1; d < *bound; ++d) { level *= gens; total += level; }
  if (total > 5e6) throw domain_error("survivor enumeration too large for this degree cap");

  std::vector<Word> out;
  for (int d = 1; d < *bound; ++d) {
    std::vector<std::uint8_t> letters(d, 0);
    while (true) {
      Word w(letters, gens);
      if (!monomial_member(w)) out.push_back(std::move(w));
      int pos = d - 1;
      while (pos >= 0 && letters[pos] == gens - 1) { letters[pos] = 0; --pos; }
      if (pos < 0) break;
      ++letters[pos];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Word>> PresentationSpec::survivors_by_degree() const {
  auto all = survivors();
  std::vector<std::vector<Word>> by_degree;
  for (auto& w : all) {
    if (static_cast<int>(by_degree.size()) < w.degree()) by_degree.resize(w.degree());
    by_degree[w.degree() - 1].push_back(std::move(w));
  }
  return by_degree;
}

std::vector<Word> PresentationSpec::support_words() const {
  std::vector<Word> out;
  for (const auto& clause : relations)
    if (auto* div = std::get_if<DivisorSupport>(&clause))
      for (const auto& s : div->support_words)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

std::vector<IntFreePoly> PresentationSpec::polynomial_relations() const {
  std::vector<IntFreePoly> out;
  for (const auto& clause : relations)
    if (auto* p = std::get_if<ExplicitPolynomial>(&clause)) out.push_back(p->poly);
  return out;
}

} // namespace engel
