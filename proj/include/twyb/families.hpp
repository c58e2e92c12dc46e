#pragma once

// Built-in structure families used by the CLI and the test corpora.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "twyb/yb_core.hpp"

namespace twyb {

/// R(x, y) = (y + 1, x - 1) on Z/n.
inline YBOperator cyclic_biquandle(int n) {
  return YBOperator::from_function(
      n, [n](int x, int y) { return Pair{static_cast<int>(mod(y + 1, n)), static_cast<int>(mod(x - 1, n))}; });
}

/// x * y = 2y - x on Z/n.
inline std::vector<std::vector<int>> dihedral_quandle(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = static_cast<int>(mod(2 * y - x, n));
  return t;
}

/// x * y = x.
inline std::vector<std::vector<int>> trivial_quandle(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = x;
  return t;
}

/// x * y = w x + w^2 y on the field with four elements {0, 1, w, w^2 = w + 1},
/// element a + b w stored as a + 2b.
inline std::vector<std::vector<int>> tetrahedral_quandle() {
  auto mul = [](int a, int b) {
    int r = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if ((a >> i & 1) && (b >> j & 1)) r ^= i + j < 2 ? 1 << (i + j) : 3;
    return r;
  };
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t[x][y] = mul(2, x) ^ mul(3, y);
  return t;
}

inline YBOperator dihedral_biquandle(int n) { return from_quandle(dihedral_quandle(n)); }

/// A finite group on {0..order-1} given by its multiplication table.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul;  // mul[a*order + b] = a b
  std::vector<int> inv;
  std::vector<std::string> labels;

  int operator()(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
};

inline FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.order = n;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv[a] = (n - a) % n;
    g.labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
  }
  return g;
}

/// Permutations of {0..k-1} in lexicographic order; (p q)(i) = p(q(i)).
inline FiniteGroup symmetric_group(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.order = static_cast<int>(perms.size());
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  g.inv.resize(g.order);
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int a = 0; a < g.order; ++a) {
    std::string label;
    for (int v : perms[a]) label += std::to_string(v + 1);
    g.labels.push_back(label);
    std::vector<int> inv(k);
    for (int i = 0; i < k; ++i) inv[perms[a][i]] = i;
    g.inv[a] = index_of(inv);
    for (int b = 0; b < g.order; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a * g.order + b] = index_of(c);
    }
  }
  return g;
}

/// R(x, y) = (y^-1, y x y).
inline YBOperator wada(const FiniteGroup& g) {
  return YBOperator::from_function(g.order, [&](int x, int y) { return Pair{g.inv[y], g(g(y, x), y)}; });
}

/// R(x, y) = (x^-1 y^-1 x, y^2 x).
inline YBOperator wada_second(const FiniteGroup& g) {
  return YBOperator::from_function(
      g.order, [&](int x, int y) { return Pair{g(g(g.inv[x], g.inv[y]), x), g(g(y, y), x)}; });
}

/// Every permutation of X commuting with R, in lexicographic order.
inline std::vector<Twist> automorphisms(const YBOperator& op) {
  std::vector<Twist> out;
  std::vector<int> p(op.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    Twist f(p);
    if (!equivariance_violation(op, f)) out.push_back(std::move(f));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// x -> x + shift on Z/n.
inline Twist translation(int n, int shift) {
  std::vector<int> p(n);
  for (int x = 0; x < n; ++x) p[x] = static_cast<int>(mod(x + shift, n));
  return Twist(std::move(p));
}

struct NamedStructure {
  std::string name;
  TwistedYBSet structure;
};

/// Twisted biquandles with |X| <= 4 from the cyclic, dihedral, trivial-quandle
/// and Alexander families, each paired with every automorphism.
inline std::vector<NamedStructure> fixture_corpus() {
  struct Base {
    std::string name;
    YBOperator op;
  };
  std::vector<Base> bases;
  bases.push_back({"one-point", cyclic_biquandle(1)});
  for (int n = 2; n <= 4; ++n) bases.push_back({"cyclic" + std::to_string(n), cyclic_biquandle(n)});
  bases.push_back({"dihedral3", dihedral_biquandle(3)});
  bases.push_back({"trivial2", from_quandle(trivial_quandle(2))});
  bases.push_back({"trivial3", from_quandle(trivial_quandle(3))});
  bases.push_back({"alexander4(3,3)", alexander_biquandle(4, 3, 3)});
  bases.push_back({"alexander3(2,1)", alexander_biquandle(3, 2, 1)});
  std::vector<NamedStructure> out;
  for (auto& b : bases) {
    if (!analyze(b.op).biquandle()) continue;
    for (auto& f : automorphisms(b.op)) {
      std::string name = b.name + "/f=";
      for (int v : f.perm()) name += std::to_string(v);
      out.push_back({name, TwistedYBSet(b.op, f)});
    }
  }
  return out;
}

}  // namespace twyb
