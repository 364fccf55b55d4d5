#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace flagrank {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (uint64_t i = 11; i * i <= n; i += 2)
    if (n % i == 0) return false;
  return true;
}

// field policy over F_p with a runtime prime; plugs into Mat<> and the
// shared elimination code
struct FpField {
  uint64_t p;
  using T = uint64_t;

  explicit FpField(uint64_t prime) : p(prime) {
    if (!is_prime_u64(p)) throw input_error("modulus is not prime: " + std::to_string(p));
  }

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T neg(T a) const { return a ? p - a : 0; }
  T sub(T a, T b) const { return add(a, neg(b)); }
  T mul(T a, T b) const { return mulmod(a, b, p); }
  T inv(T a) const {
    if (a == 0) throw std::logic_error("division by zero mod p");
    return powmod(a, p - 2, p);
  }
  T from_ll(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<T>(m);
  }
  // z^e for possibly negative e
  T pow_int(T z, long long e) const {
    if (e >= 0) return powmod(z, static_cast<uint64_t>(e), p);
    return inv(powmod(z, static_cast<uint64_t>(-e), p));
  }
};

}  // namespace flagrank
