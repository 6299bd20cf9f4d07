#pragma once

#include <optional>
#include <vector>

#include "engel/lie.hpp"
#include "engel/quotient.hpp"

namespace engel {

/// Element of the unital hull: constant * 1 + part. A unit iff the constant
/// is invertible; group computations keep the constant at 1.
template <class T>
struct Unital {
  T constant;
  Elem<T> part;
};

/// Adjoint multiplication u o v = u + v + uv; (1+u)(1+v) = 1 + u o v.
template <class R, class CR>
Elem<typename CR::Elem> circle(const QuotientAlgebra<R>& alg, const CR& cr,
                               const Elem<typename CR::Elem>& u,
                               const Elem<typename CR::Elem>& v, const ExecPolicy& pol = {}) {
  return alg.add(cr, alg.add(cr, u, v), alg.mul(cr, u, v, pol));
}

/// Circle-inverse of a nilpotent element: the alternating geometric series
/// sum_{k>=1} (-1)^k u^k, stopping at the first vanishing power.
template <class R, class CR>
Elem<typename CR::Elem> quasi_inverse(const QuotientAlgebra<R>& alg, const CR& cr,
                                      const Elem<typename CR::Elem>& u,
                                      const ExecPolicy& pol = {}) {
  auto acc = alg.neg(cr, u);
  auto power = u;
  for (int k = 2; k < alg.nilpotency_degree(); ++k) {
    power = alg.mul(cr, power, u, pol);
    if (alg.is_zero(cr, power)) break;
    acc = (k % 2 == 0) ? alg.add(cr, acc, power) : alg.sub(cr, acc, power);
  }
  return acc;
}

/// Hull arithmetic bound to one algebra and coefficient ring.
template <class R, class CR>
class Hull {
public:
  using T = typename CR::Elem;
  using U = Unital<T>;

  Hull(const QuotientAlgebra<R>& alg, const CR& cr, ExecPolicy pol = {})
      : alg_(alg), cr_(cr), pol_(pol) {}

  const QuotientAlgebra<R>& algebra() const { return alg_; }

  U one() const { return {cr_.one(), alg_.zero_elem(cr_)}; }
  U unit_plus(const Elem<T>& u) const { return {cr_.one(), u}; }

  bool is_one(const U& g) const {
    return cr_.eq(g.constant, cr_.one()) && alg_.is_zero(cr_, g.part);
  }

  bool eq(const U& g, const U& h) const {
    return cr_.eq(g.constant, h.constant) && alg_.eq(cr_, g.part, h.part);
  }

  U mul(const U& g, const U& h) const {
    U r;
    r.constant = cr_.mul(g.constant, h.constant);
    r.part = alg_.add(cr_, alg_.add(cr_, alg_.scale(cr_, h.part, g.constant),
                                    alg_.scale(cr_, g.part, h.constant)),
                      alg_.mul(cr_, g.part, h.part, pol_));
    return r;
  }

  U inv(const U& g) const {
    if (cr_.is_zero(g.constant)) throw domain_error("hull element with zero constant is not a unit");
    T ci = cr_.inv(g.constant);
    auto w = alg_.scale(cr_, g.part, ci);
    auto q = quasi_inverse(alg_, cr_, w, pol_);
    return {ci, alg_.scale(cr_, q, ci)};
  }

  /// (g, h) = g^-1 h^-1 g h.
  U commutator(const U& g, const U& h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  /// ((1+u), (n) (1+v)).
  U engel_word(const Elem<T>& u, const Elem<T>& v, int n) const {
    if (n < 1) throw domain_error("group engel word needs n >= 1");
    U g = unit_plus(u);
    U h = unit_plus(v);
    U c = g;
    for (int k = 0; k < n; ++k) c = commutator(c, h);
    return c;
  }

  /// Left-normed commutator (g_0, g_1, ..., g_{k-1}).
  U left_normed(const std::vector<U>& gs) const {
    if (gs.empty()) throw domain_error("left-normed commutator of nothing");
    U c = gs[0];
    for (std::size_t i = 1; i < gs.size(); ++i) c = commutator(c, gs[i]);
    return c;
  }

private:
  const QuotientAlgebra<R>& alg_;
  const CR& cr_;
  ExecPolicy pol_;
};

/// Generic n-Engel check for the adjoint group: the part of
/// ((1+U), (n) (1+V)) with U, V fully generic must vanish identically.
template <class R>
CheckResult<R> group_engel_check(const QuotientAlgebra<R>& alg, int n,
                                 const ExecPolicy& pol = {}) {
  const R& ring = alg.ring();
  PolyRing<R> pr = generic_ring(alg);
  auto U = generic_element(alg, pr, "u");
  auto V = generic_element(alg, pr, "v");
  Hull<R, PolyRing<R>> hull(alg, pr, pol);
  auto word = hull.engel_word(U.elem, V.elem, n);
  ENGEL_CHECK(pr.eq(word.constant, pr.one()), "group engel word lost its unit constant");

  CheckResult<R> result;
  result.pass = alg.is_zero(pr, word.part);
  if (result.pass) return result;

  Hull<R, R> concrete(alg, ring, pol);
  if (scan_basis_pairs(alg,
                       [&](int i, int j) {
                         return concrete
                             .engel_word(alg.unit_elem(ring, i), alg.unit_elem(ring, j), n)
                             .part;
                       },
                       result))
    return result;

  if (auto assignment = greedy_specialize(alg, pr, word.part)) {
    result.witness_u = specialize_element(alg, U, *assignment);
    result.witness_v = specialize_element(alg, V, *assignment);
    result.witness_value =
        concrete.engel_word(*result.witness_u, *result.witness_v, n).part;
  }
  return result;
}

/// Degree bookkeeping behind the w-in-B^k remainder claims: for generic u
/// supported in degrees >= i and v in degrees >= j, the commutator part of
/// (1+u, 1+v) is supported in degrees >= i + j.
template <class R>
bool filtration_check(const QuotientAlgebra<R>& alg, int i, int j,
                      const ExecPolicy& pol = {}) {
  if (i < 1 || j < 1) throw domain_error("filtration degrees must be >= 1");
  PolyRing<R> pr = generic_ring(alg);
  auto U = generic_element(alg, pr, "u", i);
  auto V = generic_element(alg, pr, "v", j);
  Hull<R, PolyRing<R>> hull(alg, pr, pol);
  auto c = hull.commutator(hull.unit_plus(U.elem), hull.unit_plus(V.elem));
  int lowest = alg.min_degree(pr, c.part);
  return lowest == 0 || lowest >= i + j;
}

/// Group nilpotency class with both directions computed: the class is the
/// last k for which the left-normed weight-k commutator of k independent
/// generic units has a nonzero part, verified one step past the drop.
template <class R>
struct GroupNilpotency {
  int nilpotency_class = 0;
  bool next_weight_trivial = false; // generic weight-(class+1) commutator == 1
  std::optional<std::vector<int>> witness_tuple; // basis indices, length = class
  std::optional<Elem<typename R::Elem>> witness_value;
};

namespace detail {

/// Depth-first scan over tuples of degree-1 basis units for a nonzero
/// left-normed group commutator of the given weight; a trivial prefix prunes
/// its subtree (commutators of 1 are 1).
template <class R>
bool nilpotency_witness_scan(const Hull<R, R>& hull, const QuotientAlgebra<R>& alg,
                             const Unital<typename R::Elem>& prefix, int depth, int weight,
                             std::vector<int>& tuple,
                             std::vector<int>& found, Elem<typename R::Elem>& value) {
  const R& ring = alg.ring();
  if (depth == weight) {
    if (!alg.is_zero(ring, prefix.part)) {
      found = tuple;
      value = prefix.part;
      return true;
    }
    return false;
  }
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.degree_of(i) != 1) continue;
    auto g = hull.unit_plus(alg.unit_elem(ring, i));
    auto next = depth == 0 ? g : hull.commutator(prefix, g);
    if (depth > 0 && hull.is_one(next)) continue;
    tuple.push_back(i);
    if (nilpotency_witness_scan(hull, alg, next, depth + 1, weight, tuple, found, value))
      return true;
    tuple.pop_back();
  }
  return false;
}

} // namespace detail

template <class R>
GroupNilpotency<R> group_nilpotency(const QuotientAlgebra<R>& alg, const ExecPolicy& pol = {}) {
  const R& ring = alg.ring();
  PolyRing<R> pr = generic_ring(alg);
  Hull<R, PolyRing<R>> hull(alg, pr, pol);

  GroupNilpotency<R> out;
  out.nilpotency_class = 1; // the group itself is nontrivial whenever dim > 0
  if (alg.dim() == 0) return out;

  auto chain = hull.unit_plus(generic_element(alg, pr, "g1").elem);
  for (int k = 2; k <= alg.nilpotency_degree(); ++k) {
    auto g = hull.unit_plus(generic_element(alg, pr, "g" + std::to_string(k)).elem);
    chain = hull.commutator(chain, g);
    if (alg.is_zero(pr, chain.part)) {
      out.next_weight_trivial = true;
      break;
    }
    out.nilpotency_class = k;
  }

  // Specialize a witness for the last nontrivial weight.
  Hull<R, R> concrete(alg, ring, pol);
  if (out.nilpotency_class >= 2) {
    std::vector<int> tuple, found;
    auto value = alg.zero_elem(ring);
    if (detail::nilpotency_witness_scan(concrete, alg, concrete.one(), 0,
                                        out.nilpotency_class, tuple, found, value)) {
      out.witness_tuple = found;
      out.witness_value = value;
    }
  }
  return out;
}

} // namespace engel
