#pragma once

#include <cstdint>

#include "hyperarr/rational.hpp"

namespace hyperarr {

// Arithmetic in F_p for word-sized primes.

inline int64_t mod_norm(const Int& x, int64_t p) {
  Int r = x % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return r.get_si();
}

inline int64_t mod_mul(int64_t a, int64_t b, int64_t p) {
  return static_cast<int64_t>((__int128)a * b % p);
}

// Inverse of a mod p (p prime, a not divisible by p), by extended Euclid.
inline int64_t mod_inv(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  // r == gcd(a, p) == 1 for valid inputs
  return t < 0 ? t + p : t;
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline int64_t next_prime_after(int64_t n) {
  int64_t p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace hyperarr
