#pragma once

#include <cstdint>
#include <string>

#include "engel/errors.hpp"

namespace engel {

/// Residue in [0, p); the modulus travels with the value so that mixing
/// fields is a detectable error rather than a silent coercion.
struct Fp {
  std::int64_t r = 0;
  std::int64_t p = 0; // 0 marks a default-constructed placeholder

  bool operator==(const Fp&) const = default;
};

bool is_prime_u64(std::uint64_t n);

/// Ring descriptor for the prime field of the given modulus.
struct FpRing {
  std::int64_t p;

  explicit FpRing(std::int64_t modulus);

  using Elem = Fp;
  using Base = Fp;

  Elem zero() const { return {0, p}; }
  Elem one() const { return {1 % p, p}; }
  Elem from_int(long n) const;
  Elem from_decimal(const std::string& digits) const;
  bool is_zero(const Elem& x) const { check(x); return x.r == 0; }
  bool eq(const Elem& x, const Elem& y) const { check(x); check(y); return x.r == y.r; }
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem inv(const Elem& x) const;
  Elem scale(const Elem& x, const Base& c) const { return mul(x, c); }
  std::string str(const Elem& x) const;
  long characteristic() const { return static_cast<long>(p); }

private:
  void check(const Elem& x) const {
    if (x.p != p) throw domain_error("prime field modulus mismatch");
  }
};

} // namespace engel
