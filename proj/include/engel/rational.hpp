#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "engel/errors.hpp"

namespace engel {

/// Arbitrary-precision rational, always in canonical reduced form with
/// positive denominator.
class Rat {
public:
  Rat() : q_(0) {}
  explicit Rat(long n) : q_(n) {}
  Rat(long n, long d);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rat from_decimal_string(const std::string& digits);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rat operator+(const Rat& o) const { return Rat::raw(q_ + o.q_); }
  Rat operator-(const Rat& o) const { return Rat::raw(q_ - o.q_); }
  Rat operator*(const Rat& o) const { return Rat::raw(q_ * o.q_); }
  Rat operator-() const { return Rat::raw(-q_); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  Rat inverse() const;

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  /// Renders as "p/q", with "/q" omitted when the denominator is 1.
  std::string str() const;

private:
  static Rat raw(mpq_class q) { Rat r; r.q_ = std::move(q); return r; }
  mpq_class q_;
};

/// Ring descriptor for the rationals; stateless, characteristic 0.
struct RatRing {
  using Elem = Rat;
  using Base = Rat; // base-field constants are the elements themselves

  Elem zero() const { return Rat(); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  Elem from_decimal(const std::string& digits) const { return Rat::from_decimal_string(digits); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem inv(const Elem& x) const { return x.inverse(); }
  Elem scale(const Elem& x, const Base& c) const { return x * c; }
  std::string str(const Elem& x) const { return x.str(); }
  long characteristic() const { return 0; }
};

} // namespace engel
