#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "engel/errors.hpp"

namespace engel {

/// Ordered indeterminate set with a positive integer weight per name.
/// Generic quotient elements weight each coordinate by its basis word degree,
/// so a monomial's weight mirrors the algebra degree it multiplies.
class WeightedVars {
public:
  int add(std::string name, long weight) {
    if (weight < 1) throw domain_error("indeterminate weight must be >= 1");
    for (const auto& n : names_)
      if (n == name) throw domain_error("duplicate indeterminate '" + name + "'");
    names_.push_back(std::move(name));
    weights_.push_back(weight);
    return static_cast<int>(names_.size()) - 1;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  long weight(int i) const { return weights_.at(i); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const WeightedVars&) const = default;

private:
  std::vector<std::string> names_;
  std::vector<long> weights_;
};

/// Commutative monomial: sparse exponent vector, sorted by indeterminate
/// index, exponents >= 1.
struct Mono {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

  long degree() const {
    long d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
  }

  long weight(const WeightedVars& vars) const {
    long w = 0;
    for (auto& [v, e] : factors) w += static_cast<long>(e) * vars.weight(static_cast<int>(v));
    return w;
  }

  bool operator==(const Mono&) const = default;
};

/// Graded-lex order keyed by indeterminate index: total degree first, then
/// the earlier indeterminate with the higher exponent wins.
/// Returns negative / zero / positive like a three-way comparison.
inline int mono_cmp(const Mono& a, const Mono& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    auto [va, ea] = a.factors[i];
    auto [vb, eb] = b.factors[j];
    if (va != vb) return va < vb ? 1 : -1; // exponent on the earlier var beats zero
    if (ea != eb) return ea < eb ? -1 : 1;
    ++i; ++j;
  }
  if (i < a.factors.size()) return 1;
  if (j < b.factors.size()) return -1;
  return 0;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    auto [va, ea] = a.factors[i];
    auto [vb, eb] = b.factors[j];
    if (va == vb) { r.factors.emplace_back(va, ea + eb); ++i; ++j; }
    else if (va < vb) { r.factors.emplace_back(va, ea); ++i; }
    else { r.factors.emplace_back(vb, eb); ++j; }
  }
  for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
  for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
  return r;
}

/// Sparse polynomial over coefficients K: terms sorted leading-first
/// (descending graded-lex), never storing a zero coefficient.
template <class K>
struct MPoly {
  std::vector<std::pair<Mono, K>> terms;

  bool is_zero() const { return terms.empty(); }
};

/// Polynomial ring descriptor over a base field descriptor R, with weighted
/// truncation: products drop every term whose weight exceeds `cap`.
template <class R>
struct PolyRing {
  using Base = typename R::Elem;
  using Elem = MPoly<Base>;

  R base;
  WeightedVars vars;
  long cap = std::numeric_limits<long>::max();

  explicit PolyRing(R base_ring) : base(std::move(base_ring)) {}
  PolyRing(R base_ring, WeightedVars v, long weight_cap)
      : base(std::move(base_ring)), vars(std::move(v)), cap(weight_cap) {}

  Elem zero() const { return {}; }
  Elem one() const { return from_base(base.one()); }
  Elem from_int(long n) const { return from_base(base.from_int(n)); }
  Elem from_decimal(const std::string& s) const { return from_base(base.from_decimal(s)); }

  Elem from_base(const Base& c) const {
    Elem e;
    if (!base.is_zero(c)) e.terms.emplace_back(Mono{}, c);
    return e;
  }

  Elem var(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= vars.size())
      throw domain_error("indeterminate index out of range");
    Elem e;
    e.terms.emplace_back(Mono{{{static_cast<std::uint32_t>(i), 1}}}, base.one());
    return e;
  }

  bool is_zero(const Elem& x) const { return x.terms.empty(); }

  bool eq(const Elem& x, const Elem& y) const {
    if (x.terms.size() != y.terms.size()) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
      if (!(x.terms[i].first == y.terms[i].first) ||
          !base.eq(x.terms[i].second, y.terms[i].second))
        return false;
    return true;
  }

  Elem add(const Elem& x, const Elem& y) const {
    Elem r;
    r.terms.reserve(x.terms.size() + y.terms.size());
    std::size_t i = 0, j = 0;
    while (i < x.terms.size() && j < y.terms.size()) {
      int c = mono_cmp(x.terms[i].first, y.terms[j].first);
      if (c > 0) r.terms.push_back(x.terms[i++]);
      else if (c < 0) r.terms.push_back(y.terms[j++]);
      else {
        Base s = base.add(x.terms[i].second, y.terms[j].second);
        if (!base.is_zero(s)) r.terms.emplace_back(x.terms[i].first, std::move(s));
        ++i; ++j;
      }
    }
    for (; i < x.terms.size(); ++i) r.terms.push_back(x.terms[i]);
    for (; j < y.terms.size(); ++j) r.terms.push_back(y.terms[j]);
    return r;
  }

  Elem neg(const Elem& x) const {
    Elem r = x;
    for (auto& [m, c] : r.terms) c = base.neg(c);
    return r;
  }

  Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

  Elem mul(const Elem& x, const Elem& y) const {
    std::vector<std::pair<Mono, Base>> prod;
    prod.reserve(x.terms.size() * y.terms.size());
    for (const auto& [mx, cx] : x.terms)
      for (const auto& [my, cy] : y.terms) {
        Mono m = mono_mul(mx, my);
        if (m.weight(vars) > cap) continue;
        prod.emplace_back(std::move(m), base.mul(cx, cy));
      }
    return collect(std::move(prod));
  }

  Elem scale(const Elem& x, const Base& c) const {
    if (base.is_zero(c)) return {};
    Elem r = x;
    for (auto& [m, k] : r.terms) k = base.mul(k, c);
    return r;
  }

  /// Truncation as a standalone operation: drops terms of weight > w.
  Elem truncate(const Elem& x, long w) const {
    Elem r;
    for (const auto& t : x.terms)
      if (t.first.weight(vars) <= w) r.terms.push_back(t);
    return r;
  }

  Elem inv(const Elem& x) const {
    if (x.terms.empty()) throw domain_error("inversion of zero");
    if (x.terms.size() != 1 || !x.terms[0].first.factors.empty())
      throw domain_error("inversion of a non-constant polynomial");
    return from_base(base.inv(x.terms[0].second));
  }

  Elem substitute(const Elem& x, int var_index, const Base& value) const {
    std::vector<std::pair<Mono, Base>> out;
    out.reserve(x.terms.size());
    for (const auto& [m, c] : x.terms) {
      Mono rest;
      Base coeff = c;
      bool dead = false;
      for (auto& [v, e] : m.factors) {
        if (static_cast<int>(v) == var_index) {
          if (base.is_zero(value)) { dead = true; break; }
          for (std::uint32_t k = 0; k < e; ++k) coeff = base.mul(coeff, value);
        } else {
          rest.factors.emplace_back(v, e);
        }
      }
      if (!dead) out.emplace_back(std::move(rest), std::move(coeff));
    }
    return collect(std::move(out));
  }

  std::string str(const Elem& x) const {
    if (x.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : x.terms) {
      auto [mag, negative] = base_magnitude(c);
      if (first) {
        if (negative) s += "-";
        first = false;
      } else {
        s += negative ? " - " : " + ";
      }
      std::string cs = base.str(mag);
      if (m.factors.empty()) {
        s += cs;
      } else {
        if (!base.eq(mag, base.one())) { s += cs; s += "*"; }
        bool fst = true;
        for (auto& [v, e] : m.factors) {
          if (!fst) s += "*";
          fst = false;
          s += vars.name(static_cast<int>(v));
          if (e > 1) { s += "^"; s += std::to_string(e); }
        }
      }
    }
    return s;
  }

  long characteristic() const { return base.characteristic(); }

private:
  Elem collect(std::vector<std::pair<Mono, Base>> prod) const {
    std::sort(prod.begin(), prod.end(), [](const auto& a, const auto& b) {
      return mono_cmp(a.first, b.first) > 0;
    });
    Elem r;
    r.terms.reserve(prod.size());
    for (auto& t : prod) {
      if (!r.terms.empty() && r.terms.back().first == t.first) {
        r.terms.back().second = base.add(r.terms.back().second, t.second);
        if (base.is_zero(r.terms.back().second)) r.terms.pop_back();
      } else if (!base.is_zero(t.second)) {
        r.terms.push_back(std::move(t));
      }
    }
    return r;
  }

  // Splits a coefficient into (magnitude, is-negative) for rendering; only
  // the rationals have a usable sign.
  std::pair<Base, bool> base_magnitude(const Base& c) const {
    if constexpr (requires(const Base& b) { b.sign(); (-b); }) {
      if (c.sign() < 0) return {-c, true};
    }
    return {c, false};
  }
};

} // namespace engel
