#pragma once

#include "engel/free_poly.hpp"

namespace engel {

/// [u, v] = uv - vu over any carrier supplying mul/sub. The same template
/// drives free polynomials and quotient elements.
template <class Ops, class E>
E lie_bracket(const Ops& ops, const E& u, const E& v) {
  return ops.sub(ops.mul(u, v), ops.mul(v, u));
}

/// Left-iterated bracket [u, v, v, ..., v] with v repeated k times.
template <class Ops, class E>
E engel_bracket(const Ops& ops, E u, const E& v, int k) {
  if (k < 1) throw domain_error("engel bracket needs k >= 1");
  for (int i = 0; i < k; ++i) u = lie_bracket(ops, u, v);
  return u;
}

/// Left-normed bracket [e_0, e_1, ..., e_{n-1}].
template <class Ops, class E>
E left_normed_bracket(const Ops& ops, const std::vector<E>& entries) {
  if (entries.empty()) throw domain_error("left-normed bracket of nothing");
  E acc = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) acc = lie_bracket(ops, acc, entries[i]);
  return acc;
}

template <class R>
struct FreeOps {
  const R& ring;
  using E = FreePoly<typename R::Elem>;
  E mul(const E& a, const E& b) const { return fp_mul(ring, a, b); }
  E sub(const E& a, const E& b) const { return fp_sub(ring, a, b); }
};

/// Closed form of the iterated bracket in two free generators:
///   [x, y, ..., y]  (k copies of y)  =  sum_i C(k,i) (-1)^i y^i x y^(k-i).
template <class R>
FreePoly<typename R::Elem> engel_closed_form(const R& ring, int k, int gen_x = 0, int gen_y = 1,
                                             int alphabet = 2) {
  if (k < 1) throw domain_error("closed form needs k >= 1");
  // Pascal row for C(k, i).
  std::vector<long> binom(k + 1, 1);
  for (int row = 1; row <= k; ++row)
    for (int i = row - 1; i >= 1; --i) binom[i] += binom[i - 1];

  FreePoly<typename R::Elem> p;
  for (int i = 0; i <= k; ++i) {
    std::vector<std::uint8_t> letters;
    letters.insert(letters.end(), i, static_cast<std::uint8_t>(gen_y));
    letters.push_back(static_cast<std::uint8_t>(gen_x));
    letters.insert(letters.end(), k - i, static_cast<std::uint8_t>(gen_y));
    auto c = ring.from_int((i % 2 == 0) ? binom[i] : -binom[i]);
    fp_add_term(ring, p, Word(std::move(letters), alphabet), c);
  }
  return p;
}

} // namespace engel
