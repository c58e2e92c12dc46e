#pragma once

// Arithmetic in Z/N for small moduli. Values are kept in [0, N).

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "twyb/error.hpp"

namespace twyb {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 n) {
  return static_cast<i64>((static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

struct ExtGcd {
  i64 g;
  i64 s;
  i64 t;
};

/// s*a + t*b = g = gcd(a, b) >= 0.
inline ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline std::optional<i64> inverse_mod(i64 a, i64 n) {
  if (n == 1) return 0;
  ExtGcd e = ext_gcd(mod(a, n), n);
  if (e.g != 1) return std::nullopt;
  return mod(e.s, n);
}

/// base^exp mod n; a negative exponent requires base to be a unit.
inline i64 pow_mod(i64 base, i64 exp, i64 n) {
  if (n == 1) return 0;
  if (exp < 0) {
    auto inv = inverse_mod(base, n);
    if (!inv) throw ValidationError("negative power of a non-unit");
    base = *inv;
    exp = -exp;
  }
  i64 result = 1 % n;
  i64 b = mod(base, n);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exp >>= 1;
  }
  return result;
}

/// Smallest k >= 1 with u^k = 1 mod n. u must be a unit.
inline i64 multiplicative_order(i64 u, i64 n) {
  if (std::gcd(mod(u, n), n) != 1) throw ValidationError("not a unit");
  if (n == 1) return 1;
  i64 x = mod(u, n);
  i64 k = 1;
  while (x != 1) {
    x = mul_mod(x, u, n);
    ++k;
  }
  return k;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime-power factors of n ordered by prime, e.g. 12 -> {4, 3}.
inline std::vector<i64> prime_power_factors(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    i64 q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace twyb
