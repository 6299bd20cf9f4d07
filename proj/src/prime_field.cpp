#include "engel/prime_field.hpp"

namespace engel {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

FpRing::FpRing(std::int64_t modulus) : p(modulus) {
  if (modulus < 2 || !is_prime_u64(static_cast<std::uint64_t>(modulus)))
    throw domain_error("characteristic must be 0 or a prime, got " + std::to_string(modulus));
}

Fp FpRing::from_int(long n) const {
  std::int64_t r = static_cast<std::int64_t>(n) % p;
  if (r < 0) r += p;
  return {r, p};
}

Fp FpRing::from_decimal(const std::string& digits) const {
  std::int64_t r = 0;
  std::size_t i = 0;
  bool negative = false;
  if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) {
    negative = digits[i] == '-';
    ++i;
  }
  if (i == digits.size()) throw domain_error("not a decimal integer literal: '" + digits + "'");
  for (; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9')
      throw domain_error("not a decimal integer literal: '" + digits + "'");
    r = (r * 10 + (digits[i] - '0')) % p;
  }
  if (negative) r = (p - r) % p;
  return {r, p};
}

Fp FpRing::add(const Elem& x, const Elem& y) const {
  check(x); check(y);
  std::int64_t r = x.r + y.r;
  if (r >= p) r -= p;
  return {r, p};
}

Fp FpRing::sub(const Elem& x, const Elem& y) const {
  check(x); check(y);
  std::int64_t r = x.r - y.r;
  if (r < 0) r += p;
  return {r, p};
}

Fp FpRing::mul(const Elem& x, const Elem& y) const {
  check(x); check(y);
  return {static_cast<std::int64_t>(mulmod_u64(static_cast<std::uint64_t>(x.r),
                                               static_cast<std::uint64_t>(y.r),
                                               static_cast<std::uint64_t>(p))),
          p};
}

Fp FpRing::neg(const Elem& x) const {
  check(x);
  return {x.r == 0 ? 0 : p - x.r, p};
}

Fp FpRing::inv(const Elem& x) const {
  check(x);
  if (x.r == 0) throw domain_error("inversion of zero");
  // extended Euclid
  std::int64_t a = x.r, b = p, u = 1, v = 0;
  while (b) {
    std::int64_t t = a / b;
    a -= t * b; std::swap(a, b);
    u -= t * v; std::swap(u, v);
  }
  if (u < 0) u += p;
  return {u, p};
}

std::string FpRing::str(const Elem& x) const {
  check(x);
  return std::to_string(x.r) + " mod " + std::to_string(p);
}

} // namespace engel
