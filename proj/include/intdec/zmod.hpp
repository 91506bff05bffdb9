#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace intdec {

/// Residue ring Z/p^k with p prime, k >= 1, p^k <= 2^31.
/// All arithmetic is exact; products of two reduced residues fit in int64.
struct Ring {
  int64_t p = 0;
  int64_t k = 0;
  int64_t mod = 0;  // p^k

  static Ring make(int64_t p, int64_t k);

  bool operator==(const Ring&) const = default;

  int64_t reduce(int64_t a) const {
    a %= mod;
    return a < 0 ? a + mod : a;
  }
  int64_t add(int64_t a, int64_t b) const { return (a + b) % mod; }
  int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % mod; }
  int64_t neg(int64_t a) const { return a == 0 ? 0 : mod - a; }

  /// p-adic valuation of a residue; val(0) = k by convention.
  int64_t val(int64_t a) const {
    if (a == 0) return k;
    int64_t v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  }
  bool is_unit(int64_t a) const { return a % p != 0; }

  /// Inverse of a unit residue (extended Euclid).
  int64_t inv(int64_t a) const;

  /// p^e for 0 <= e <= k.
  int64_t pow_p(int64_t e) const {
    int64_t r = 1;
    for (int64_t i = 0; i < e; ++i) r *= p;
    return r;
  }
};

inline Ring Ring::make(int64_t p, int64_t k) {
  if (p < 2) throw std::invalid_argument("modulus prime must be >= 2");
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus base " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("modulus exponent must be >= 1");
  __int128 m = 1;
  for (int64_t i = 0; i < k; ++i) {
    m *= p;
    if (m > (__int128(1) << 31)) throw std::invalid_argument("modulus p^k exceeds 2^31");
  }
  Ring r;
  r.p = p;
  r.k = k;
  r.mod = int64_t(m);
  return r;
}

inline int64_t Ring::inv(int64_t a) const {
  a = reduce(a);
  if (!is_unit(a)) throw std::invalid_argument("attempt to invert a non-unit residue");
  int64_t r0 = mod, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

}  // namespace intdec
