#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "engel/bracket.hpp"
#include "engel/mpoly.hpp"
#include "engel/quotient.hpp"

namespace engel {

/// The truncation cap mirrors nilpotency: a coefficient monomial of weight
/// >= the nilpotency degree multiplies a product of that many algebra
/// elements, which vanishes.
template <class R>
PolyRing<R> generic_ring(const QuotientAlgebra<R>& alg) {
  return PolyRing<R>(alg.ring(), WeightedVars{}, alg.nilpotency_degree() - 1);
}

/// Element whose coordinates are fresh indeterminates, one per basis word,
/// each weighted by its word's degree. Distinct calls draw disjoint
/// indeterminates from the shared ring.
template <class R>
struct GenericElement {
  Elem<MPoly<typename R::Elem>> elem;
  std::vector<int> var_of_coord; // -1 where the coordinate is pinned to zero
};

template <class R>
GenericElement<R> generic_element(const QuotientAlgebra<R>& alg, PolyRing<R>& pr,
                                  const std::string& prefix, int min_degree = 1) {
  GenericElement<R> g{alg.zero_elem(pr), std::vector<int>(alg.dim(), -1)};
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.degree_of(i) < min_degree) continue;
    int v = pr.vars.add(prefix + "_" + std::to_string(i + 1), alg.degree_of(i));
    g.elem.c[i] = pr.var(v);
    g.var_of_coord[i] = v;
  }
  return g;
}

/// Generic element over selected coordinates with caller-chosen names.
template <class R>
GenericElement<R> generic_element_named(const QuotientAlgebra<R>& alg, PolyRing<R>& pr,
                                        const std::vector<std::pair<int, std::string>>& coords) {
  GenericElement<R> g{alg.zero_elem(pr), std::vector<int>(alg.dim(), -1)};
  for (const auto& [i, name] : coords) {
    int v = pr.vars.add(name, alg.degree_of(i));
    g.elem.c[i] = pr.var(v);
    g.var_of_coord[i] = v;
  }
  return g;
}

/// Greedy specialization of the indeterminates of a nonzero generic value to
/// small scalars, keeping the value nonzero at every step. Returns the full
/// assignment, or nothing when stuck (possible over tiny prime fields).
template <class R>
std::optional<std::vector<typename R::Elem>> greedy_specialize(
    const QuotientAlgebra<R>& alg, const PolyRing<R>& pr,
    Elem<MPoly<typename R::Elem>> value) {
  using K = typename R::Elem;
  const R& ring = pr.base;
  const int nvars = static_cast<int>(pr.vars.size());
  std::vector<K> assignment(nvars, ring.zero());
  const long raw_candidates[] = {0, 1, -1, 2, -2, 3, -3, 4, -4};
  for (int v = 0; v < nvars; ++v) {
    bool placed = false;
    for (long c : raw_candidates) {
      K cand = ring.from_int(c);
      Elem<MPoly<K>> next = value;
      bool nonzero = false;
      for (auto& coord : next.c) {
        coord = pr.substitute(coord, v, cand);
        if (!coord.is_zero()) nonzero = true;
      }
      if (nonzero) {
        assignment[v] = cand;
        value = std::move(next);
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  return assignment;
}

template <class R>
Elem<typename R::Elem> specialize_element(const QuotientAlgebra<R>& alg,
                                          const GenericElement<R>& g,
                                          const std::vector<typename R::Elem>& assignment) {
  auto out = alg.zero_elem(alg.ring());
  for (int i = 0; i < alg.dim(); ++i)
    if (g.var_of_coord[i] >= 0) out.c[i] = assignment[g.var_of_coord[i]];
  return out;
}

/// Outcome of an identity check, with a concrete witness when it fails.
template <class R>
struct CheckResult {
  bool pass = false;
  std::optional<Elem<typename R::Elem>> witness_u, witness_v, witness_value;
};

/// Scans basis pairs in canonical order for a violation of `eval`
/// (eval(i, j) returns the concrete identity value; nonzero = violation).
template <class R, class F>
bool scan_basis_pairs(const QuotientAlgebra<R>& alg, F&& eval, CheckResult<R>& out) {
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      auto value = eval(i, j);
      if (!alg.is_zero(alg.ring(), value)) {
        out.witness_u = alg.unit_elem(alg.ring(), i);
        out.witness_v = alg.unit_elem(alg.ring(), j);
        out.witness_value = std::move(value);
        return true;
      }
    }
  return false;
}

/// Symbolic strategy: the n-fold bracket of two fully generic elements must
/// be the zero vector of weight-truncated polynomials. Over a prime field
/// this verifies the polynomial-identity form of the Engel law.
template <class R>
CheckResult<R> lie_engel_symbolic(const QuotientAlgebra<R>& alg, int n,
                                  const ExecPolicy& pol = {}) {
  const R& ring = alg.ring();
  PolyRing<R> pr = generic_ring(alg);
  auto U = generic_element(alg, pr, "u");
  auto V = generic_element(alg, pr, "v");
  QuotOps<R, PolyRing<R>> ops{alg, pr, pol};
  auto value = engel_bracket(ops, U.elem, V.elem, n);

  CheckResult<R> result;
  result.pass = alg.is_zero(pr, value);
  if (result.pass) return result;

  QuotOps<R, R> base_ops{alg, ring, pol};
  if (scan_basis_pairs(alg,
                       [&](int i, int j) {
                         return engel_bracket(base_ops, alg.unit_elem(ring, i),
                                              alg.unit_elem(ring, j), n);
                       },
                       result))
    return result;

  if (auto assignment = greedy_specialize(alg, pr, value)) {
    result.witness_u = specialize_element(alg, U, *assignment);
    result.witness_v = specialize_element(alg, V, *assignment);
    result.witness_value =
        engel_bracket(base_ops, *result.witness_u, *result.witness_v, n);
  }
  return result;
}

/// Symmetrized strategy result: the first failing bucket is identified by
/// the base element and the multiset of bracket entries.
template <class R>
struct SymmetrizedResult {
  bool pass = false;
  std::optional<int> witness_base;
  std::optional<std::vector<int>> witness_multiset;
  std::optional<Elem<typename R::Elem>> witness_sum;
};

namespace detail {

/// Extends the left-normed bracket over every index sequence, accumulating
/// leaf values into per-multiset buckets. A zero prefix kills the whole
/// subtree ([0, e] = 0), which is what makes the enumeration tractable.
template <class R>
void symmetrized_descend(const QuotientAlgebra<R>& alg, const Elem<typename R::Elem>& acc,
                         std::vector<int>& path, int depth, int n,
                         std::map<std::vector<int>, Elem<typename R::Elem>>& buckets) {
  const R& ring = alg.ring();
  if (depth == n) {
    std::vector<int> key = path;
    std::sort(key.begin(), key.end());
    auto it = buckets.find(key);
    if (it == buckets.end()) buckets.emplace(std::move(key), acc);
    else it->second = alg.add(ring, it->second, acc);
    return;
  }
  QuotOps<R, R> ops{alg, ring, ExecPolicy{}};
  for (int i = 0; i < alg.dim(); ++i) {
    auto next = lie_bracket(ops, acc, alg.unit_elem(ring, i));
    if (alg.is_zero(ring, next)) continue;
    path.push_back(i);
    symmetrized_descend(alg, next, path, depth + 1, n, buckets);
    path.pop_back();
  }
}

/// A subtlety of the pruned walk: leaves below a zero prefix contribute the
/// zero element to their buckets, so a bucket can fail to appear even though
/// arrangements of its multiset were visited. Absent buckets therefore sum
/// to zero by construction.
template <class R>
std::map<std::vector<int>, Elem<typename R::Elem>> symmetrized_buckets_for_base(
    const QuotientAlgebra<R>& alg, int base_index, int n) {
  std::map<std::vector<int>, Elem<typename R::Elem>> buckets;
  std::vector<int> path;
  symmetrized_descend(alg, alg.unit_elem(alg.ring(), base_index), path, 0, n, buckets);
  return buckets;
}

} // namespace detail

/// Symmetrized strategy: for every basis element e_j and every multiset of n
/// basis indices, the sum of left-normed brackets [e_j, e_s1, ..., e_sn]
/// over the distinct arrangements of the multiset must vanish. Equivalent to
/// the symbolic identity (linear in u, multihomogeneous in v) but sharing
/// only the structure constants with it.
template <class R>
SymmetrizedResult<R> lie_engel_symmetrized(const QuotientAlgebra<R>& alg, int n,
                                           const ExecPolicy& pol = {}) {
  const R& ring = alg.ring();
  const int dim = alg.dim();
  std::vector<std::map<std::vector<int>, Elem<typename R::Elem>>> per_base(dim);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(pol.jobs > 0 ? pol.jobs : 1)
#endif
  for (int j = 0; j < dim; ++j)
    per_base[j] = detail::symmetrized_buckets_for_base(alg, j, n);

  SymmetrizedResult<R> result;
  result.pass = true;
  for (int j = 0; j < dim && result.pass; ++j) {
    for (const auto& [multiset, sum] : per_base[j]) {
      if (!alg.is_zero(ring, sum)) {
        result.pass = false;
        result.witness_base = j;
        result.witness_multiset = multiset;
        result.witness_sum = sum;
        break;
      }
    }
  }
  return result;
}

/// Naive reference for the symmetrized strategy: enumerates each multiset,
/// then its distinct permutations, recomputing every bracket from scratch.
/// Kept simple for cross-checking the pruned walk on small n.
template <class R>
SymmetrizedResult<R> lie_engel_symmetrized_naive(const QuotientAlgebra<R>& alg, int n) {
  const R& ring = alg.ring();
  const int dim = alg.dim();
  QuotOps<R, R> ops{alg, ring, ExecPolicy{}};
  SymmetrizedResult<R> result;
  result.pass = true;
  for (int j = 0; j < dim; ++j) {
    std::vector<int> multiset(n, 0);
    while (true) {
      std::vector<int> arrangement = multiset;
      auto sum = alg.zero_elem(ring);
      do {
        auto acc = alg.unit_elem(ring, j);
        for (int idx : arrangement) {
          acc = lie_bracket(ops, acc, alg.unit_elem(ring, idx));
          if (alg.is_zero(ring, acc)) break;
        }
        sum = alg.add(ring, sum, acc);
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      if (!alg.is_zero(ring, sum)) {
        result.pass = false;
        result.witness_base = j;
        result.witness_multiset = multiset;
        result.witness_sum = sum;
        return result;
      }
      // next nondecreasing index tuple
      int pos = n - 1;
      while (pos >= 0 && multiset[pos] == dim - 1) --pos;
      if (pos < 0) break;
      int v = multiset[pos] + 1;
      for (int t = pos; t < n; ++t) multiset[t] = v;
    }
  }
  return result;
}

/// The multihomogeneous components of the 5-fold bracket of two generic
/// elements supported on the degree <= 2 coordinates, keyed by the
/// coefficient monomial.
template <class R>
struct Engel5Components {
  std::vector<std::string> keys;                      // canonical order
  std::vector<Elem<typename R::Elem>> components;     // parallel to keys
  const Elem<typename R::Elem>* find(const std::string& key) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == key) return &components[i];
    return nullptr;
  }
};

template <class R>
Engel5Components<R> engel5_components(const QuotientAlgebra<R>& alg) {
  PolyRing<R> pr = generic_ring(alg);
  std::vector<int> low;
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.degree_of(i) <= 2) low.push_back(i);
  if (low.size() != 5)
    throw domain_error("component decomposition expects 2 + 3 low-degree basis words");
  const char* first_names[] = {"alpha1", "beta1", "gamma1", "delta1", "mu1"};
  const char* second_names[] = {"alpha2", "beta2", "gamma2", "delta2", "mu2"};
  std::vector<std::pair<int, std::string>> coords_u, coords_v;
  for (std::size_t t = 0; t < 5; ++t) {
    coords_u.emplace_back(low[t], first_names[t]);
    coords_v.emplace_back(low[t], second_names[t]);
  }
  auto U = generic_element_named(alg, pr, coords_u);
  auto V = generic_element_named(alg, pr, coords_v);
  QuotOps<R, PolyRing<R>> ops{alg, pr, ExecPolicy{}};
  auto value = engel_bracket(ops, U.elem, V.elem, 5);

  std::map<Mono, Elem<typename R::Elem>, decltype([](const Mono& a, const Mono& b) {
             return mono_cmp(a, b) < 0;
           })>
      by_mono;
  for (int i = 0; i < alg.dim(); ++i)
    for (const auto& [m, c] : value.c[i].terms) {
      auto it = by_mono.find(m);
      if (it == by_mono.end())
        it = by_mono.emplace(m, alg.zero_elem(alg.ring())).first;
      it->second.c[i] = alg.ring().add(it->second.c[i], c);
    }

  Engel5Components<R> out;
  for (auto& [m, comp] : by_mono) {
    MPoly<typename R::Elem> single;
    single.terms.emplace_back(m, pr.base.one());
    out.keys.push_back(pr.str(single));
    out.components.push_back(std::move(comp));
  }
  return out;
}

/// Lie lower central series by subspace iteration: L_1 = B,
/// L_{k+1} = span{[w, e] : w in L_k, e basis}. Returns the dimension
/// sequence down to zero and the class (last k with L_k != 0).
template <class R>
struct LowerCentralSeries {
  std::vector<int> dims; // dims[k-1] = dim L_k, ending with the last nonzero
  int nilpotency_class = 0;
};

template <class R>
LowerCentralSeries<R> lie_lower_central_series(const QuotientAlgebra<R>& alg) {
  const R& ring = alg.ring();
  const int n = alg.dim();
  QuotOps<R, R> ops{alg, ring, ExecPolicy{}};

  LowerCentralSeries<R> out;
  RowEchelon<R> current(ring, n);
  for (int i = 0; i < n; ++i) {
    std::vector<typename R::Elem> v(n, ring.zero());
    v[i] = ring.one();
    current.insert(std::move(v));
  }
  while (current.rank() > 0) {
    out.dims.push_back(current.rank());
    ++out.nilpotency_class;
    ENGEL_CHECK(out.nilpotency_class <= n + 1, "lower central series fails to terminate");
    RowEchelon<R> next(ring, n);
    for (const auto& row : current.rows()) {
      Elem<typename R::Elem> w{alg.id(), row};
      for (int i = 0; i < n; ++i) {
        auto br = lie_bracket(ops, w, alg.unit_elem(ring, i));
        next.insert(std::move(br.c));
      }
    }
    current = std::move(next);
  }
  return out;
}

} // namespace engel
