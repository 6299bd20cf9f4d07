#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <tuple>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "engel/free_poly.hpp"
#include "engel/presentation.hpp"

namespace engel {

/// Worker-pool degree for the parallel kernels; 1 selects the serial path.
struct ExecPolicy {
  int jobs = 1;
};

/// Dense coefficient vector over a quotient algebra's basis. Carries the
/// owning algebra's id so cross-algebra arithmetic is a detectable error.
template <class T>
struct Elem {
  std::uint64_t alg_id = 0;
  std::vector<T> c;
};

/// Exact reduced row echelon form over a field descriptor R. Pivot of a row
/// is its first nonzero column; columns follow the canonical word order, so
/// the pivot is the canonically smallest word in the row.
template <class R>
class RowEchelon {
public:
  using K = typename R::Elem;

  RowEchelon(const R& ring, int width) : ring_(&ring), width_(width) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<K>>& rows() const { return rows_; }
  int width() const { return width_; }

  void reduce(std::vector<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& c = v[pivots_[r]];
      if (ring_->is_zero(c)) continue;
      K f = c;
      for (int j = pivots_[r]; j < width_; ++j)
        v[j] = ring_->sub(v[j], ring_->mul(f, rows_[r][j]));
    }
  }

  /// Reduces and, when independent, inserts the normalized row, keeping the
  /// reduced echelon invariant. Returns the inserted row's snapshot, or an
  /// empty vector when dependent.
  std::vector<K> insert(std::vector<K> v) {
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
      if (!ring_->is_zero(v[j])) { pivot = j; break; }
    if (pivot < 0) return {};
    K inv = ring_->inv(v[pivot]);
    for (int j = pivot; j < width_; ++j) v[j] = ring_->mul(v[j], inv);
    // clear this pivot column from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& c = rows_[r][pivot];
      if (ring_->is_zero(c)) continue;
      K f = c;
      for (int j = pivot; j < width_; ++j)
        rows_[r][j] = ring_->sub(rows_[r][j], ring_->mul(f, v[j]));
    }
    // keep rows ordered by pivot
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, pivot);
    return v;
  }

private:
  const R* ring_;
  int width_;
  std::vector<std::vector<K>> rows_;
  std::vector<int> pivots_;
};

/// Finite-dimensional quotient of the free algebra by a bounded presentation:
/// graded word basis, echelonized rewrite rows for the eliminated survivors,
/// and precomputed structure constants. Immutable once built; element
/// arithmetic is pure and safe to share across workers.
template <class R>
class QuotientAlgebra {
public:
  using K = typename R::Elem;

  static QuotientAlgebra build(const R& ring, const PresentationSpec& spec) {
    QuotientAlgebra alg(ring, spec);
    alg.run_build();
    return alg;
  }

  const R& ring() const { return ring_; }
  const PresentationSpec& spec() const { return spec_; }
  std::uint64_t id() const { return id_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Word>& basis() const { return basis_; }
  const std::vector<Word>& survivors() const { return survivors_; }
  int degree_of(int i) const { return basis_[i].degree(); }
  int max_degree() const { return basis_.empty() ? 0 : basis_.back().degree(); }
  int nilpotency_degree() const { return nilpotency_degree_; }
  long characteristic() const { return ring_.characteristic(); }
  int ideal_subspace_dim() const { return ideal_dim_; }

  std::vector<int> graded_dims() const {
    std::vector<int> dims(max_degree(), 0);
    for (const auto& w : basis_) ++dims[w.degree() - 1];
    return dims;
  }

  /// Rewrite data: eliminated survivor word -> combination of basis words.
  const std::map<Word, std::vector<std::pair<int, K>>>& rewrite_rows() const {
    return rewrite_rows_;
  }

  const std::vector<std::pair<int, K>>& structure_row(int i, int j) const {
    return sc_[static_cast<std::size_t>(i) * basis_.size() + j];
  }

  // ---- element construction -------------------------------------------

  template <class CR>
  Elem<typename CR::Elem> zero_elem(const CR& cr) const {
    return {id_, std::vector<typename CR::Elem>(basis_.size(), cr.zero())};
  }

  template <class CR>
  Elem<typename CR::Elem> unit_elem(const CR& cr, int basis_index) const {
    auto e = zero_elem(cr);
    e.c.at(basis_index) = cr.one();
    return e;
  }

  int basis_index_of(const Word& w) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
    if (it == basis_.end() || !(*it == w)) return -1;
    return static_cast<int>(it - basis_.begin());
  }

  /// Image of a generator in the quotient.
  template <class CR>
  Elem<typename CR::Elem> generator_image(const CR& cr, int g) const {
    FreePoly<typename CR::Elem> p;
    fp_add_term(cr, p, Word({static_cast<std::uint8_t>(g)}, spec_.generator_count()), cr.one());
    return normal_form(cr, p);
  }

  // ---- element arithmetic ----------------------------------------------

  template <class CR>
  bool is_zero(const CR& cr, const Elem<typename CR::Elem>& u) const {
    check_elem(u);
    for (const auto& x : u.c)
      if (!cr.is_zero(x)) return false;
    return true;
  }

  template <class CR>
  bool eq(const CR& cr, const Elem<typename CR::Elem>& u, const Elem<typename CR::Elem>& v) const {
    check_elem(u); check_elem(v);
    for (std::size_t i = 0; i < u.c.size(); ++i)
      if (!cr.eq(u.c[i], v.c[i])) return false;
    return true;
  }

  template <class CR>
  Elem<typename CR::Elem> add(const CR& cr, const Elem<typename CR::Elem>& u,
                              const Elem<typename CR::Elem>& v) const {
    check_elem(u); check_elem(v);
    auto r = u;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = cr.add(r.c[i], v.c[i]);
    return r;
  }

  template <class CR>
  Elem<typename CR::Elem> sub(const CR& cr, const Elem<typename CR::Elem>& u,
                              const Elem<typename CR::Elem>& v) const {
    check_elem(u); check_elem(v);
    auto r = u;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = cr.sub(r.c[i], v.c[i]);
    return r;
  }

  template <class CR>
  Elem<typename CR::Elem> neg(const CR& cr, const Elem<typename CR::Elem>& u) const {
    check_elem(u);
    auto r = u;
    for (auto& x : r.c) x = cr.neg(x);
    return r;
  }

  /// Scale by a base-field constant (base constants embed into any
  /// coefficient ring over the same base).
  template <class CR>
  Elem<typename CR::Elem> scale_base(const CR& cr, const Elem<typename CR::Elem>& u,
                                     const K& k) const {
    check_elem(u);
    auto r = u;
    for (auto& x : r.c) x = cr.scale(x, k);
    return r;
  }

  template <class CR>
  Elem<typename CR::Elem> scale(const CR& cr, const Elem<typename CR::Elem>& u,
                                const typename CR::Elem& t) const {
    check_elem(u);
    auto r = u;
    for (auto& x : r.c) x = cr.mul(x, t);
    return r;
  }

  /// Bilinear product through the structure constants. Serial reference.
  template <class CR>
  Elem<typename CR::Elem> mul_serial(const CR& cr, const Elem<typename CR::Elem>& u,
                                     const Elem<typename CR::Elem>& v) const {
    check_elem(u); check_elem(v);
    const int n = dim();
    auto r = zero_elem(cr);
    for (int i = 0; i < n; ++i) {
      if (cr.is_zero(u.c[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (cr.is_zero(v.c[j])) continue;
        const auto& row = structure_row(i, j);
        if (row.empty()) continue;
        auto prod = cr.mul(u.c[i], v.c[j]);
        if (cr.is_zero(prod)) continue;
        for (const auto& [k, coeff] : row)
          r.c[k] = cr.add(r.c[k], cr.scale(prod, coeff));
      }
    }
    return r;
  }

  /// Same product, gathered per output coordinate from the transposed table
  /// so coordinates can be computed independently. With exact arithmetic the
  /// result is identical to the serial path.
  template <class CR>
  Elem<typename CR::Elem> mul_parallel(const CR& cr, const Elem<typename CR::Elem>& u,
                                       const Elem<typename CR::Elem>& v, int jobs) const {
    check_elem(u); check_elem(v);
    const int n = dim();
    auto r = zero_elem(cr);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
    for (int k = 0; k < n; ++k) {
      auto acc = cr.zero();
      for (const auto& [i, j, coeff] : sc_transposed_[k]) {
        if (cr.is_zero(u.c[i]) || cr.is_zero(v.c[j])) continue;
        acc = cr.add(acc, cr.scale(cr.mul(u.c[i], v.c[j]), coeff));
      }
      r.c[k] = std::move(acc);
    }
    return r;
  }

  template <class CR>
  Elem<typename CR::Elem> mul(const CR& cr, const Elem<typename CR::Elem>& u,
                              const Elem<typename CR::Elem>& v,
                              const ExecPolicy& pol = {}) const {
    if (pol.jobs > 1) return mul_parallel(cr, u, v, pol.jobs);
    return mul_serial(cr, u, v);
  }

  /// Projection onto the basis words of one degree.
  template <class CR>
  Elem<typename CR::Elem> graded_component(const CR& cr, const Elem<typename CR::Elem>& u,
                                           int degree) const {
    check_elem(u);
    auto r = zero_elem(cr);
    for (int i = 0; i < dim(); ++i)
      if (basis_[i].degree() == degree) r.c[i] = u.c[i];
    return r;
  }

  /// Lowest degree with a nonzero component; 0 for the zero element.
  template <class CR>
  int min_degree(const CR& cr, const Elem<typename CR::Elem>& u) const {
    check_elem(u);
    for (int i = 0; i < dim(); ++i)
      if (!cr.is_zero(u.c[i])) return basis_[i].degree();
    return 0;
  }

  // ---- normal forms ------------------------------------------------------

  /// Reduces a free polynomial: monomial-ideal words drop, eliminated
  /// survivors rewrite through the echelon rows, basis words keep their
  /// coefficient. Linear and idempotent.
  template <class CR>
  Elem<typename CR::Elem> normal_form(const CR& cr, const FreePoly<typename CR::Elem>& p) const {
    auto r = zero_elem(cr);
    for (const auto& [w, t] : p.terms) {
      if (spec_.monomial_member(w)) continue;
      auto rw = rewrite_rows_.find(w);
      if (rw != rewrite_rows_.end()) {
        for (const auto& [bi, k] : rw->second)
          r.c[bi] = cr.add(r.c[bi], cr.scale(t, k));
      } else {
        int bi = basis_index_of(w);
        ENGEL_CHECK(bi >= 0, "survivor word missing from basis");
        r.c[bi] = cr.add(r.c[bi], t);
      }
    }
    return r;
  }

  /// Normal form of a ring-neutral integer polynomial.
  template <class CR>
  Elem<typename CR::Elem> normal_form_int(const CR& cr, const IntFreePoly& p) const {
    FreePoly<typename CR::Elem> q;
    for (const auto& [w, z] : p.terms)
      fp_add_term(cr, q, w, cr.from_decimal(z.get_str()));
    return normal_form(cr, q);
  }

  template <class CR>
  std::string elem_str(const CR& cr, const Elem<typename CR::Elem>& u) const {
    check_elem(u);
    std::string s;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
      if (cr.is_zero(u.c[i])) continue;
      if (!first) s += " + ";
      first = false;
      std::string cs = cr.str(u.c[i]);
      if (cs != "1") { s += "("; s += cs; s += ")*"; }
      s += basis_[i].str(spec_.generators);
    }
    return first ? "0" : s;
  }

  /// One extra closure round over the finished ideal subspace; true when the
  /// dimension is already stable (the build invariant).
  bool closure_is_stable() const {
    RowEchelon<R> ech(ring_, static_cast<int>(survivors_.size()));
    std::vector<std::vector<K>> rows = ideal_rows_;
    for (auto& row : rows) ech.insert(row);
    int before = ech.rank();
    for (const auto& row : ideal_rows_)
      for (int g = 0; g < spec_.generator_count(); ++g) {
        if (!ech.insert(mult_in_monomial_quotient(row, g, true)).empty()) return false;
        if (!ech.insert(mult_in_monomial_quotient(row, g, false)).empty()) return false;
      }
    return ech.rank() == before;
  }

private:
  QuotientAlgebra(const R& ring, PresentationSpec spec)
      : ring_(ring), spec_(std::move(spec)), id_(next_id()) {}

  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }

  template <class T>
  void check_elem(const Elem<T>& e) const {
    if (e.alg_id != id_) throw domain_error("element belongs to a different algebra");
    ENGEL_CHECK(e.c.size() == basis_.size(), "element coordinate count mismatch");
  }

  int survivor_index_of(const Word& w) const {
    auto it = std::lower_bound(survivors_.begin(), survivors_.end(), w);
    if (it == survivors_.end() || !(*it == w)) return -1;
    return static_cast<int>(it - survivors_.begin());
  }

  /// Left or right multiplication by a generator inside the monomial-only
  /// quotient: concatenate each survivor word, drop monomial-ideal members.
  std::vector<K> mult_in_monomial_quotient(const std::vector<K>& row, int g, bool left) const {
    std::vector<K> out(survivors_.size(), ring_.zero());
    Word gw(std::vector<std::uint8_t>{static_cast<std::uint8_t>(g)}, spec_.generator_count());
    for (std::size_t s = 0; s < row.size(); ++s) {
      if (ring_.is_zero(row[s])) continue;
      Word prod = left ? gw * survivors_[s] : survivors_[s] * gw;
      if (spec_.monomial_member(prod)) continue;
      int t = survivor_index_of(prod);
      ENGEL_CHECK(t >= 0, "survivor product neither member nor survivor");
      out[t] = ring_.add(out[t], row[s]);
    }
    return out;
  }

  void run_build() {
    survivors_ = spec_.survivors();
    const int width = static_cast<int>(survivors_.size());

    // Ideal subspace: seed with the explicit polynomials projected onto the
    // survivor coordinates, then close under one-sided multiplication by the
    // generators until the span stabilizes.
    RowEchelon<R> ech(ring_, width);
    std::deque<std::vector<K>> queue;
    for (const auto& rel : spec_.polynomial_relations()) {
      std::vector<K> row(width, ring_.zero());
      for (const auto& [w, z] : rel.terms) {
        if (spec_.monomial_member(w)) continue;
        int s = survivor_index_of(w);
        ENGEL_CHECK(s >= 0, "relation word neither member nor survivor");
        row[s] = ring_.add(row[s], ring_.from_decimal(z.get_str()));
      }
      auto snap = ech.insert(std::move(row));
      if (!snap.empty()) queue.push_back(std::move(snap));
    }
    while (!queue.empty()) {
      auto row = std::move(queue.front());
      queue.pop_front();
      for (int g = 0; g < spec_.generator_count(); ++g) {
        for (bool left : {true, false}) {
          auto snap = ech.insert(mult_in_monomial_quotient(row, g, left));
          if (!snap.empty()) queue.push_back(std::move(snap));
        }
      }
    }
    ideal_dim_ = ech.rank();
    ideal_rows_ = ech.rows();

    // Pivot survivors are eliminated; the rest form the basis.
    std::vector<bool> is_pivot(width, false);
    for (int p : ech.pivots()) is_pivot[p] = true;
    basis_.clear();
    std::vector<int> basis_index(width, -1);
    for (int s = 0; s < width; ++s)
      if (!is_pivot[s]) {
        basis_index[s] = static_cast<int>(basis_.size());
        basis_.push_back(survivors_[s]);
      }

    rewrite_rows_.clear();
    for (int r = 0; r < ech.rank(); ++r) {
      const auto& row = ech.rows()[r];
      int p = ech.pivots()[r];
      std::vector<std::pair<int, K>> tail;
      for (int j = 0; j < width; ++j) {
        if (j == p || ring_.is_zero(row[j])) continue;
        ENGEL_CHECK(basis_index[j] >= 0, "rewrite tail touches another pivot");
        tail.emplace_back(basis_index[j], ring_.neg(row[j]));
      }
      rewrite_rows_.emplace(survivors_[p], std::move(tail));
    }

    // Structure constants: reduce every basis-word concatenation.
    const int n = dim();
    sc_.assign(static_cast<std::size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Word prod = basis_[i] * basis_[j];
        if (spec_.monomial_member(prod)) continue;
        auto rw = rewrite_rows_.find(prod);
        if (rw != rewrite_rows_.end()) {
          sc_[static_cast<std::size_t>(i) * n + j] = rw->second;
        } else {
          int bi = basis_index_of(prod);
          ENGEL_CHECK(bi >= 0, "basis product neither member, pivot, nor basis");
          sc_[static_cast<std::size_t>(i) * n + j] = {{bi, ring_.one()}};
        }
      }

    sc_transposed_.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, coeff] : structure_row(i, j))
          sc_transposed_[k].emplace_back(i, j, coeff);

    compute_nilpotency_degree();
  }

  void compute_nilpotency_degree() {
    // Power chain: P_1 = span(basis); P_{k+1} = span(e_i * P_k).
    const int n = dim();
    RowEchelon<R> current(ring_, n);
    for (int i = 0; i < n; ++i) {
      std::vector<K> v(n, ring_.zero());
      v[i] = ring_.one();
      current.insert(std::move(v));
    }
    int k = 1;
    while (current.rank() > 0) {
      RowEchelon<R> next(ring_, n);
      for (int i = 0; i < n && next.rank() < n; ++i) {
        for (const auto& row : current.rows()) {
          std::vector<K> prod(n, ring_.zero());
          for (int j = 0; j < n; ++j) {
            if (ring_.is_zero(row[j])) continue;
            for (const auto& [t, coeff] : structure_row(i, j))
              prod[t] = ring_.add(prod[t], ring_.mul(row[j], coeff));
          }
          next.insert(std::move(prod));
        }
      }
      current = std::move(next);
      ++k;
      ENGEL_CHECK(k <= n + 2, "power chain fails to terminate");
    }
    nilpotency_degree_ = k;
  }

  R ring_;
  PresentationSpec spec_;
  std::uint64_t id_;
  std::vector<Word> survivors_;
  std::vector<Word> basis_;
  std::map<Word, std::vector<std::pair<int, K>>> rewrite_rows_;
  std::vector<std::vector<std::pair<int, K>>> sc_;
  std::vector<std::vector<std::tuple<int, int, K>>> sc_transposed_;
  std::vector<std::vector<K>> ideal_rows_;
  int ideal_dim_ = 0;
  int nilpotency_degree_ = 0;
};

/// Carrier ops binding an algebra and a coefficient ring for the generic
/// bracket templates.
template <class R, class CR>
struct QuotOps {
  const QuotientAlgebra<R>& alg;
  const CR& cr;
  ExecPolicy pol{};

  using E = Elem<typename CR::Elem>;
  E mul(const E& a, const E& b) const { return alg.mul(cr, a, b, pol); }
  E sub(const E& a, const E& b) const { return alg.sub(cr, a, b); }
};

} // namespace engel
