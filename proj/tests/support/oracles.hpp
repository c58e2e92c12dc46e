#pragma once

// Brute-force reference computations written against plain functions, with
// no use of the library's verifiers, face maps or linear algebra.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Map2 = std::function<std::pair<int, int>(int, int)>;

/// YBE by composing the two sides as maps on X^3.
inline bool ybe(int n, const Map2& r) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // (R x id)(id x R)(R x id)
        auto [p1, p2] = r(a, b);
        auto [q2, q3] = r(p2, c);
        auto [l1, l2] = r(p1, q2);
        int l3 = q3;
        // (id x R)(R x id)(id x R)
        auto [s2, s3] = r(b, c);
        auto [t1, t2] = r(a, s2);
        auto [u2, u3] = r(t2, s3);
        if (l1 != t1 || l2 != u2 || l3 != u3) return false;
      }
  return true;
}

inline bool bijective(int n, const Map2& r) {
  std::vector<int> hit(static_cast<std::size_t>(n * n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = r(x, y);
      if (hit[static_cast<std::size_t>(a * n + b)]++) return false;
    }
  return true;
}

inline bool birack(int n, const Map2& r) {
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      int c = 0;
      for (int y = 0; y < n; ++y) c += r(x, y).first == z;
      if (c != 1) return false;
    }
  for (int y = 0; y < n; ++y)
    for (int w = 0; w < n; ++w) {
      int c = 0;
      for (int x = 0; x < n; ++x) c += r(x, y).second == w;
      if (c != 1) return false;
    }
  return true;
}

inline bool type1(int n, const Map2& r) {
  for (int a = 0; a < n; ++a) {
    int c = 0;
    for (int x = 0; x < n; ++x) c += r(x, a) == std::pair{x, a};
    if (c != 1) return false;
  }
  return true;
}

/// Number of maps phi : X^2 -> Z/N that vanish on pairs fixed by R, satisfy
/// the explicit 2-cocycle identity with f^m applied to coordinates, and
/// satisfy phi(f x, f y) = u phi(x, y).
inline std::uint64_t count_tbq_2cocycles(int n, const Map2& r, const std::vector<int>& f, int m, int modulus,
                                         int unit) {
  auto fm = [&](int x) {
    int v = x;
    for (int i = 0; i < m; ++i) v = f[v];
    for (int i = 0; i < -m; ++i) {
      int pre = 0;
      while (f[pre] != v) ++pre;
      v = pre;
    }
    return v;
  };
  std::vector<int> free;  // pair indices not fixed by R
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r(x, y) != std::pair{x, y}) free.push_back(x * n + y);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) total *= static_cast<std::uint64_t>(modulus);
  std::uint64_t count = 0;
  std::vector<int> phi(static_cast<std::size_t>(n * n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(phi.begin(), phi.end(), 0);
    std::uint64_t c = code;
    for (int idx : free) {
      phi[static_cast<std::size_t>(idx)] = static_cast<int>(c % static_cast<std::uint64_t>(modulus));
      c /= static_cast<std::uint64_t>(modulus);
    }
    auto P = [&](int x, int y) { return phi[static_cast<std::size_t>(x * n + y)]; };
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (P(f[x], f[y]) != (unit * P(x, y)) % modulus) ok = false;
    for (int x1 = 0; x1 < n && ok; ++x1)
      for (int x2 = 0; x2 < n && ok; ++x2)
        for (int x3 = 0; x3 < n && ok; ++x3) {
          int a1 = fm(x1), a2 = fm(x2), a3 = fm(x3);
          auto [r1a, r2a] = r(a1, a2);
          int lhs = P(r1a, r(r2a, a3).first) + P(r(x1, x2).second, x3) + P(a1, a2);
          auto [s1, s2] = r(x2, x3);
          int rhs = P(x2, x3) + P(a1, r(a2, a3).first) + P(r(x1, s1).second, s2);
          if ((lhs - rhs) % modulus != 0) ok = false;
        }
    if (ok) ++count;
  }
  return count;
}

/// Number of solutions of A v = 0 over Z/N by enumeration.
inline std::uint64_t kernel_size(const std::vector<std::vector<long long>>& a, int cols, long long modulus) {
  std::uint64_t total = 1;
  for (int i = 0; i < cols; ++i) total *= static_cast<std::uint64_t>(modulus);
  std::uint64_t count = 0;
  std::vector<long long> v(static_cast<std::size_t>(cols));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < cols; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<long long>(c % static_cast<std::uint64_t>(modulus));
      c /= static_cast<std::uint64_t>(modulus);
    }
    bool zero = true;
    for (const auto& row : a) {
      long long s = 0;
      for (int i = 0; i < cols; ++i) s += row[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
      if (s % modulus != 0) {
        zero = false;
        break;
      }
    }
    if (zero) ++count;
  }
  return count;
}

/// Rank over F_p by plain Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2, b = ((x % p) + p) % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (((a[r][c] % p) + p) % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    long long iv = inv(a[rank][c]);
    for (auto& x : a[rank]) x = ((x * iv) % p + p) % p;
    for (int r = 0; r < rows; ++r)
      if (r != rank) {
        long long k = ((a[r][c] % p) + p) % p;
        if (!k) continue;
        for (int j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - k * a[rank][j]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
