#pragma once

#include <string>
#include <vector>

#include "engel/free_poly.hpp"
#include "engel/presentation.hpp"

namespace engel {
namespace io {

/// Parses one monic word in star/caret syntax, e.g. "y*x*y^3*x*y".
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

/// Parses a polynomial with integer coefficients:
///   expr   := '-'? term (('+'|'-') term)*
///   term   := integer ('*' factor)+ | factor ('*' factor)*
///   factor := generator ('^' positive-integer)?
/// '*' is mandatory between factors; whitespace is insignificant.
/// Errors carry the byte offset of the offending token.
IntFreePoly parse_int_poly(const std::string& text, const std::vector<std::string>& generators);

/// Canonical rendering of an integer polynomial; parse_int_poly round-trips it.
std::string render_int_poly(const IntFreePoly& p, const std::vector<std::string>& generators);

/// Same grammar with coefficients mapped into the given ring.
template <class R>
FreePoly<typename R::Elem> parse_poly(const R& ring, const std::string& text,
                                      const std::vector<std::string>& generators) {
  IntFreePoly ip = parse_int_poly(text, generators);
  FreePoly<typename R::Elem> p;
  for (const auto& [w, z] : ip.terms)
    fp_add_term(ring, p, w, ring.from_decimal(z.get_str()));
  return p;
}

/// Parses a presentation document (JSON). Validates generator names,
/// characteristic primality, word membership of kept/support lists, and
/// requires a degree_cap clause so the presentation is bounded.
PresentationSpec parse_presentation(const std::string& json_text);

/// Canonical JSON rendering; parse_presentation(render_presentation(s)) == s.
std::string render_presentation(const PresentationSpec& spec);

PresentationSpec load_presentation_file(const std::string& path);

} // namespace io
} // namespace engel
