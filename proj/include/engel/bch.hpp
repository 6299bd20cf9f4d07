#pragma once

#include "engel/group.hpp"

namespace engel {

namespace detail {
template <class R, class CR>
void require_invertible_factorials(const QuotientAlgebra<R>& alg, const CR& cr) {
  long p = cr.characteristic();
  if (p != 0 && p < alg.nilpotency_degree())
    throw domain_error(
        "exp/log need every k! up to the nilpotency bound invertible; characteristic " +
        std::to_string(p) + " is too small");
}
} // namespace detail

/// exp(u) = sum_{k=0}^{nd-1} u^k / k! in the unital hull.
template <class R, class CR>
Unital<typename CR::Elem> exp_unital(const QuotientAlgebra<R>& alg, const CR& cr,
                                     const Elem<typename CR::Elem>& u,
                                     const ExecPolicy& pol = {}) {
  detail::require_invertible_factorials(alg, cr);
  Unital<typename CR::Elem> r{cr.one(), u};
  auto power = u;
  auto coeff = cr.one();
  for (int k = 2; k < alg.nilpotency_degree(); ++k) {
    power = alg.mul(cr, power, u, pol);
    if (alg.is_zero(cr, power)) break;
    coeff = cr.mul(coeff, cr.inv(cr.from_int(k)));
    r.part = alg.add(cr, r.part, alg.scale(cr, power, coeff));
  }
  return r;
}

/// log(1 + p) = sum_{k=1}^{nd-1} (-1)^(k+1) p^k / k; the constant must be 1.
template <class R, class CR>
Elem<typename CR::Elem> log_unital(const QuotientAlgebra<R>& alg, const CR& cr,
                                   const Unital<typename CR::Elem>& g,
                                   const ExecPolicy& pol = {}) {
  detail::require_invertible_factorials(alg, cr);
  if (!cr.eq(g.constant, cr.one()))
    throw domain_error("log is defined on 1 + part only (constant must be 1)");
  auto acc = g.part;
  auto power = g.part;
  for (int k = 2; k < alg.nilpotency_degree(); ++k) {
    power = alg.mul(cr, power, g.part, pol);
    if (alg.is_zero(cr, power)) break;
    auto term = alg.scale(cr, power, cr.inv(cr.from_int(k)));
    acc = (k % 2 == 0) ? alg.sub(cr, acc, term) : alg.add(cr, acc, term);
  }
  return acc;
}

/// The group law u * v = log(exp(u) exp(v)) on the underlying space.
template <class R, class CR>
Elem<typename CR::Elem> bch_product(const QuotientAlgebra<R>& alg, const CR& cr,
                                    const Elem<typename CR::Elem>& u,
                                    const Elem<typename CR::Elem>& v,
                                    const ExecPolicy& pol = {}) {
  Hull<R, CR> hull(alg, cr, pol);
  return log_unital(alg, cr, hull.mul(exp_unital(alg, cr, u, pol), exp_unital(alg, cr, v, pol)),
                    pol);
}

/// Group commutator in the star group: (-u) * (-v) * u * v.
/// (-u is the star inverse: exp(-u) = exp(u)^-1.) Since * composes through
/// exponentials exactly, the iterated product is one log of a hull product.
template <class R, class CR>
Elem<typename CR::Elem> star_commutator(const QuotientAlgebra<R>& alg, const CR& cr,
                                        const Elem<typename CR::Elem>& u,
                                        const Elem<typename CR::Elem>& v,
                                        const ExecPolicy& pol = {}) {
  Hull<R, CR> hull(alg, cr, pol);
  auto prod = hull.mul(exp_unital(alg, cr, alg.neg(cr, u), pol),
                       exp_unital(alg, cr, alg.neg(cr, v), pol));
  prod = hull.mul(prod, exp_unital(alg, cr, u, pol));
  prod = hull.mul(prod, exp_unital(alg, cr, v, pol));
  return log_unital(alg, cr, prod, pol);
}

template <class R, class CR>
Elem<typename CR::Elem> star_engel_word(const QuotientAlgebra<R>& alg, const CR& cr,
                                        const Elem<typename CR::Elem>& u,
                                        const Elem<typename CR::Elem>& v, int n,
                                        const ExecPolicy& pol = {}) {
  if (n < 1) throw domain_error("star engel word needs n >= 1");
  auto c = u;
  for (int k = 0; k < n; ++k) c = star_commutator(alg, cr, c, v, pol);
  return c;
}

/// Generic n-Engel check for the star group. Failures are witnessed by the
/// transported basis pair (log(1+e_i), log(1+e_j)) when one violates the
/// identity, matching the group module's minimal witnesses under the
/// log correspondence.
template <class R>
CheckResult<R> star_engel_check(const QuotientAlgebra<R>& alg, int n,
                                const ExecPolicy& pol = {}) {
  const R& ring = alg.ring();
  PolyRing<R> pr = generic_ring(alg);
  auto U = generic_element(alg, pr, "u");
  auto V = generic_element(alg, pr, "v");
  auto value = star_engel_word(alg, pr, U.elem, V.elem, n, pol);

  CheckResult<R> result;
  result.pass = alg.is_zero(pr, value);
  if (result.pass) return result;

  // Scan the transported basis pairs (log(1+e_i), log(1+e_j)) and record the
  // star elements themselves as the witness.
  Hull<R, R> hull(alg, ring, pol);
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      auto su = log_unital(alg, ring, hull.unit_plus(alg.unit_elem(ring, i)), pol);
      auto sv = log_unital(alg, ring, hull.unit_plus(alg.unit_elem(ring, j)), pol);
      auto w = star_engel_word(alg, ring, su, sv, n, pol);
      if (!alg.is_zero(ring, w)) {
        result.witness_u = std::move(su);
        result.witness_v = std::move(sv);
        result.witness_value = std::move(w);
        return result;
      }
    }

  if (auto assignment = greedy_specialize(alg, pr, value)) {
    result.witness_u = specialize_element(alg, U, *assignment);
    result.witness_v = specialize_element(alg, V, *assignment);
    result.witness_value =
        star_engel_word(alg, ring, *result.witness_u, *result.witness_v, n, pol);
  }
  return result;
}

} // namespace engel
