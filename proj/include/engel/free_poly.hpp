#pragma once

#include <map>
#include <string>

#include "engel/word.hpp"

namespace engel {

/// Element of the free associative algebra without unity: a finite
/// scalar-weighted combination of words. Keys iterate in canonical word
/// order; zero coefficients are never stored.
template <class K>
struct FreePoly {
  std::map<Word, K> terms;

  bool is_zero() const { return terms.empty(); }
};

template <class R>
FreePoly<typename R::Elem> fp_word(const R&, const Word& w, typename R::Elem c) {
  FreePoly<typename R::Elem> p;
  p.terms.emplace(w, std::move(c));
  return p;
}

template <class R>
void fp_add_term(const R& ring, FreePoly<typename R::Elem>& p, const Word& w,
                 const typename R::Elem& c) {
  auto it = p.terms.find(w);
  if (it == p.terms.end()) {
    if (!ring.is_zero(c)) p.terms.emplace(w, c);
  } else {
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second)) p.terms.erase(it);
  }
}

template <class R>
FreePoly<typename R::Elem> fp_add(const R& ring, const FreePoly<typename R::Elem>& a,
                                  const FreePoly<typename R::Elem>& b) {
  FreePoly<typename R::Elem> r = a;
  for (const auto& [w, c] : b.terms) fp_add_term(ring, r, w, c);
  return r;
}

template <class R>
FreePoly<typename R::Elem> fp_neg(const R& ring, const FreePoly<typename R::Elem>& a) {
  FreePoly<typename R::Elem> r = a;
  for (auto& [w, c] : r.terms) c = ring.neg(c);
  return r;
}

template <class R>
FreePoly<typename R::Elem> fp_sub(const R& ring, const FreePoly<typename R::Elem>& a,
                                  const FreePoly<typename R::Elem>& b) {
  return fp_add(ring, a, fp_neg(ring, b));
}

template <class R>
FreePoly<typename R::Elem> fp_scale(const R& ring, const FreePoly<typename R::Elem>& a,
                                    const typename R::Elem& c) {
  FreePoly<typename R::Elem> r;
  if (ring.is_zero(c)) return r;
  for (const auto& [w, k] : a.terms) {
    auto p = ring.mul(k, c);
    if (!ring.is_zero(p)) r.terms.emplace(w, std::move(p));
  }
  return r;
}

/// Bilinear product by word concatenation.
template <class R>
FreePoly<typename R::Elem> fp_mul(const R& ring, const FreePoly<typename R::Elem>& a,
                                  const FreePoly<typename R::Elem>& b) {
  FreePoly<typename R::Elem> r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms)
      fp_add_term(ring, r, wa * wb, ring.mul(ca, cb));
  return r;
}

template <class R>
bool fp_eq(const R& ring, const FreePoly<typename R::Elem>& a,
           const FreePoly<typename R::Elem>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto it = a.terms.begin();
  auto jt = b.terms.begin();
  for (; it != a.terms.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || !ring.eq(it->second, jt->second)) return false;
  }
  return true;
}

template <class R>
std::string fp_str(const R& ring, const FreePoly<typename R::Elem>& p,
                   const std::vector<std::string>& generator_names) {
  if (p.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms) {
    typename R::Elem mag = c;
    bool negative = false;
    if constexpr (requires(const typename R::Elem& x) { x.sign(); (-x); }) {
      if (c.sign() < 0) { mag = -c; negative = true; }
    }
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    if (!ring.eq(mag, ring.one())) { s += ring.str(mag); s += "*"; }
    s += w.str(generator_names);
  }
  return s;
}

} // namespace engel
