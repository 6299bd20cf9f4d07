#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "engel/word.hpp"

namespace engel {

/// Relation polynomial with exact integer coefficients, ring-neutral so a
/// presentation can be instantiated over any characteristic later.
struct IntFreePoly {
  std::map<Word, mpz_class> terms;
  bool operator==(const IntFreePoly&) const = default;
};

// Relation clauses. The first four generate a monomial ideal; membership is
// testable per word. Explicit polynomials are handled downstream by linear
// algebra over the survivor space.
struct DegreeCap {
  int min_total_degree;
  bool operator==(const DegreeCap&) const = default;
};
struct GeneratorDegreeCap {
  int generator;
  int min_degree;
  bool operator==(const GeneratorDegreeCap&) const = default;
};
struct DegreeSliceExcept {
  int degree;
  std::vector<Word> kept_words;
  bool operator==(const DegreeSliceExcept&) const = default;
};
struct DivisorSupport {
  int max_degree;
  std::vector<Word> support_words;
  bool operator==(const DivisorSupport&) const = default;
};
struct ExplicitPolynomial {
  IntFreePoly poly;
  bool operator==(const ExplicitPolynomial&) const = default;
};

using RelationClause =
    std::variant<DegreeCap, GeneratorDegreeCap, DegreeSliceExcept, DivisorSupport,
                 ExplicitPolynomial>;

/// Declarative ideal description: generators, coefficient characteristic and
/// relation clauses. Immutable once parsed.
struct PresentationSpec {
  std::vector<std::string> generators;
  long characteristic = 0; // 0 or a prime
  std::vector<RelationClause> relations;

  bool operator==(const PresentationSpec&) const = default;

  int generator_count() const { return static_cast<int>(generators.size()); }

  /// Characteristic 2 or 3 is accepted for exploration but flagged.
  bool outside_theorem_hypotheses() const {
    return characteristic == 2 || characteristic == 3;
  }

  /// Least DegreeCap bound; a presentation without one is unbounded.
  std::optional<int> degree_bound() const;

  bool has_polynomial_relations() const;

  /// The sub-presentation with the polynomial clauses removed.
  PresentationSpec monomial_part() const;

  /// True iff the word is a multiple of some monomial relation instance
  /// (membership in the monomial ideal the non-polynomial clauses generate).
  bool monomial_member(const Word& w) const;

  /// All words not in the monomial ideal, in canonical order.
  /// Throws when no DegreeCap bounds the enumeration.
  std::vector<Word> survivors() const;

  /// Survivors grouped by degree, index 0 holding degree 1.
  std::vector<std::vector<Word>> survivors_by_degree() const;

  /// Union of support words over all DivisorSupport clauses.
  std::vector<Word> support_words() const;

  std::vector<IntFreePoly> polynomial_relations() const;
};

} // namespace engel
