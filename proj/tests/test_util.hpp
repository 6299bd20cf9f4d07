#pragma once

#include <random>
#include <string>
#include <vector>

#include "engel/free_poly.hpp"
#include "engel/io.hpp"
#include "engel/quotient.hpp"
#include "engel/rational.hpp"

namespace testutil {

inline constexpr std::uint64_t kSeed = 0x5eed5eedULL;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(kSeed ^ salt); }

inline engel::Rat random_rat(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return engel::Rat(num(g), den(g));
}

inline engel::Word random_word(std::mt19937_64& g, int generators, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  int d = deg(g);
  std::vector<std::uint8_t> letters(d);
  std::uniform_int_distribution<int> letter(0, generators - 1);
  for (auto& l : letters) l = static_cast<std::uint8_t>(letter(g));
  return engel::Word(std::move(letters), generators);
}

template <class R>
engel::FreePoly<typename R::Elem> random_free_poly(const R& ring, std::mt19937_64& g,
                                                   int generators, int max_degree,
                                                   int max_terms) {
  engel::FreePoly<typename R::Elem> p;
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<long> coeff(-6, 6);
  int n = terms(g);
  for (int i = 0; i < n; ++i)
    fp_add_term(ring, p, random_word(g, generators, max_degree), ring.from_int(coeff(g)));
  return p;
}

template <class R>
engel::Elem<typename R::Elem> random_elem(const engel::QuotientAlgebra<R>& alg,
                                          std::mt19937_64& g, int max_coords = 6) {
  auto e = alg.zero_elem(alg.ring());
  std::uniform_int_distribution<int> idx(0, alg.dim() - 1);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<int> count(1, max_coords);
  int n = count(g);
  for (int i = 0; i < n; ++i)
    e.c[idx(g)] = alg.ring().from_int(coeff(g));
  return e;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ENGEL_FIXTURE_DIR) + "/" + name;
}

inline const engel::PresentationSpec& paper_spec() {
  static engel::PresentationSpec spec =
      engel::io::load_presentation_file(fixture_path("engel5.json"));
  return spec;
}

} // namespace testutil
