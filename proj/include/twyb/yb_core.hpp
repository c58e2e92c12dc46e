#pragma once

// Finite set-theoretic Yang-Baxter operators on X = {0..n-1}, their
// birack/biquandle classification, twists and twisted operators.

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twyb/error.hpp"
#include "twyb/modular.hpp"
#include "twyb/parallel.hpp"

namespace twyb {

using Pair = std::pair<int, int>;
using Triple = std::array<int, 3>;

/// Raised by make_twisted when f does not commute with R.
class EquivarianceError : public ValidationError {
 public:
  EquivarianceError(int x, int y)
      : ValidationError("twist does not commute with R at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")"),
        witness_{x, y} {}
  Pair witness() const noexcept { return witness_; }

 private:
  Pair witness_;
};

/// Raised by from_quandle; `axiom()` names the violated axiom.
class QuandleAxiomError : public ValidationError {
 public:
  QuandleAxiomError(std::string axiom, const std::string& detail)
      : ValidationError(axiom + " violated: " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// A map R = (R1, R2) : X x X -> X x X stored as dense tables.
///
/// Tables of any map are representable so verifiers can report on them; the
/// inverse tables exist only when R is a bijection of X x X.
class YBOperator {
 public:
  YBOperator() = default;

  /// r1, r2 are row-major size*size tables: r1[x*size + y] = R1(x, y).
  YBOperator(int size, std::vector<int> r1, std::vector<int> r2)
      : size_(size), r1_(std::move(r1)), r2_(std::move(r2)) {
    if (size <= 0) throw StructuralError("carrier size must be positive");
    std::size_t cells = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
    if (r1_.size() != cells || r2_.size() != cells)
      throw StructuralError("table dimensions do not match carrier size " +
                            std::to_string(size));
    for (std::size_t i = 0; i < cells; ++i) {
      if (r1_[i] < 0 || r1_[i] >= size || r2_[i] < 0 || r2_[i] >= size)
        throw StructuralError("table entry out of range at (" + std::to_string(i / size) +
                              ", " + std::to_string(i % size) + ")");
    }
    build_inverse();
  }

  template <class F>
  static YBOperator from_function(int size, F&& f) {
    std::vector<int> r1(static_cast<std::size_t>(size) * size), r2(r1.size());
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        auto [a, b] = f(x, y);
        r1[idx(size, x, y)] = a;
        r2[idx(size, x, y)] = b;
      }
    return YBOperator(size, std::move(r1), std::move(r2));
  }

  int size() const noexcept { return size_; }
  int r1(int x, int y) const { return r1_[idx(size_, x, y)]; }
  int r2(int x, int y) const { return r2_[idx(size_, x, y)]; }
  Pair operator()(int x, int y) const { return {r1(x, y), r2(x, y)}; }

  bool invertible() const noexcept { return !r1inv_.empty(); }
  int r1inv(int x, int y) const { return inverse_table(r1inv_)[idx(size_, x, y)]; }
  int r2inv(int x, int y) const { return inverse_table(r2inv_)[idx(size_, x, y)]; }
  Pair inverse(int x, int y) const { return {r1inv(x, y), r2inv(x, y)}; }

  /// Two distinct inputs with the same image, when R is not injective.
  std::optional<std::pair<Pair, Pair>> collision() const { return collision_; }

  const std::vector<int>& r1_table() const noexcept { return r1_; }
  const std::vector<int>& r2_table() const noexcept { return r2_; }

  friend bool operator==(const YBOperator& a, const YBOperator& b) {
    return a.size_ == b.size_ && a.r1_ == b.r1_ && a.r2_ == b.r2_;
  }

 private:
  static std::size_t idx(int size, int x, int y) {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
           static_cast<std::size_t>(y);
  }

  const std::vector<int>& inverse_table(const std::vector<int>& t) const {
    if (t.empty()) throw ValidationError("R is not invertible on X x X");
    return t;
  }

  void build_inverse() {
    std::size_t cells = r1_.size();
    std::vector<int> seen(cells, -1);
    for (std::size_t i = 0; i < cells; ++i) {
      std::size_t image = idx(size_, r1_[i], r2_[i]);
      if (seen[image] >= 0) {
        int j = seen[image];
        collision_ = std::make_pair(Pair{j / size_, j % size_},
                                    Pair{static_cast<int>(i) / size_, static_cast<int>(i) % size_});
        return;
      }
      seen[image] = static_cast<int>(i);
    }
    r1inv_.resize(cells);
    r2inv_.resize(cells);
    for (std::size_t image = 0; image < cells; ++image) {
      r1inv_[image] = seen[image] / size_;
      r2inv_[image] = seen[image] % size_;
    }
  }

  int size_ = 0;
  std::vector<int> r1_, r2_;
  std::vector<int> r1inv_, r2inv_;
  std::optional<std::pair<Pair, Pair>> collision_;
};

/// A permutation f of X together with its order and cached powers.
class Twist {
 public:
  Twist() = default;

  explicit Twist(std::vector<int> perm) : perm_(std::move(perm)) {
    int n = static_cast<int>(perm_.size());
    if (n == 0) throw StructuralError("twist must act on a nonempty carrier");
    std::vector<bool> hit(perm_.size(), false);
    for (int v : perm_) {
      if (v < 0 || v >= n) throw ValidationError("twist entry out of range");
      if (hit[v]) throw ValidationError("twist is not a bijection");
      hit[v] = true;
    }
    // order = lcm of cycle lengths
    std::vector<bool> visited(perm_.size(), false);
    i64 order = 1;
    for (int s = 0; s < n; ++s) {
      if (visited[s]) continue;
      i64 len = 0;
      for (int x = s; !visited[x]; x = perm_[x]) {
        visited[x] = true;
        ++len;
      }
      order = std::lcm(order, len);
    }
    order_ = static_cast<int>(order);
    powers_.resize(static_cast<std::size_t>(order_) * n);
    for (int x = 0; x < n; ++x) powers_[x] = x;
    for (int k = 1; k < order_; ++k)
      for (int x = 0; x < n; ++x) powers_[k * n + x] = perm_[powers_[(k - 1) * n + x]];
    for (int x = 0; x < n; ++x)
      if (perm_[powers_[(order_ - 1) * n + x]] != x)
        throw InternalConsistencyError("f^order is not the identity");
  }

  static Twist identity(int size) {
    std::vector<int> p(static_cast<std::size_t>(size));
    std::iota(p.begin(), p.end(), 0);
    return Twist(std::move(p));
  }

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  int order() const noexcept { return order_; }
  bool is_identity() const noexcept { return order_ == 1; }
  int operator()(int x) const { return perm_[x]; }

  /// f^k(x) for any integer k.
  int power(i64 k, int x) const {
    int j = static_cast<int>(mod(k, order_));
    return powers_[static_cast<std::size_t>(j) * perm_.size() + x];
  }

  const std::vector<int>& perm() const noexcept { return perm_; }

  friend bool operator==(const Twist& a, const Twist& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<int> perm_;
  int order_ = 1;
  std::vector<int> powers_;
};

enum class StructureKind { YBSet, Birack, Biquandle };

struct StructureClass {
  StructureKind kind = StructureKind::YBSet;
  bool twisted = false;

  bool is_birack() const noexcept { return kind != StructureKind::YBSet; }
  bool is_biquandle() const noexcept { return kind == StructureKind::Biquandle; }
  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

inline std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::YBSet:
      return "yb-set";
    case StructureKind::Birack:
      return "birack";
    case StructureKind::Biquandle:
      return "biquandle";
  }
  return "?";
}

inline std::string to_string(const StructureClass& c) {
  return (c.twisted ? "twisted " : "") + to_string(c.kind);
}

// ---------------------------------------------------------------------------
// Yang-Baxter equation

/// Both sides of the braid relation applied to (x, y, z).
inline std::pair<Triple, Triple> braid_sides(const YBOperator& op, int x, int y, int z) {
  auto [a0, a1] = op(x, y);
  auto [b0, b1] = op(a1, z);
  auto [c0, c1] = op(a0, b0);
  Triple lhs{c0, c1, b1};
  auto [d0, d1] = op(y, z);
  auto [e0, e1] = op(x, d0);
  auto [g0, g1] = op(e1, d1);
  Triple rhs{e0, g0, g1};
  return {lhs, rhs};
}

namespace detail {

template <class Pred>
std::optional<Triple> first_failing_triple(int n, unsigned jobs, Pred&& fails) {
  std::size_t total = static_cast<std::size_t>(n) * n * n;
  std::vector<std::optional<std::size_t>> found(std::max(1u, jobs));
  std::size_t chunks = parallel_chunks(total, jobs, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      int x = static_cast<int>(i / (n * n)), y = static_cast<int>((i / n) % n),
          z = static_cast<int>(i % n);
      if (fails(x, y, z)) {
        found[c] = i;
        return;
      }
    }
  });
  for (std::size_t c = 0; c < chunks; ++c)
    if (found[c]) {
      std::size_t i = *found[c];
      return Triple{static_cast<int>(i / (n * n)), static_cast<int>((i / n) % n),
                    static_cast<int>(i % n)};
    }
  return std::nullopt;
}

}  // namespace detail

/// Lexicographically first (x, y, z) where the composite maps
/// (R x id)(id x R)(R x id) and (id x R)(R x id)(id x R) differ.
inline std::optional<Triple> ybe_violation(const YBOperator& op, unsigned jobs = 1) {
  return detail::first_failing_triple(op.size(), jobs, [&](int x, int y, int z) {
    auto [l, r] = braid_sides(op, x, y, z);
    return l != r;
  });
}

/// Same check through the three componentwise identities
///   R1(R1(a,b), R1(R2(a,b),c)) = R1(a, R1(b,c))
///   R2(R1(a,b), R1(R2(a,b),c)) = R1(R2(a,R1(b,c)), R2(b,c))
///   R2(R2(a,b), c)             = R2(R2(a,R1(b,c)), R2(b,c))
inline std::optional<Triple> ybe_component_violation(const YBOperator& op, unsigned jobs = 1) {
  return detail::first_failing_triple(op.size(), jobs, [&](int a, int b, int c) {
    int ab1 = op.r1(a, b), ab2 = op.r2(a, b), bc1 = op.r1(b, c), bc2 = op.r2(b, c);
    int inner = op.r1(ab2, c);
    int a_bc1 = op.r2(a, bc1);
    bool eq1 = op.r1(ab1, inner) == op.r1(a, bc1);
    bool eq2 = op.r2(ab1, inner) == op.r1(a_bc1, bc2);
    bool eq3 = op.r2(ab2, c) == op.r2(a_bc1, bc2);
    return !(eq1 && eq2 && eq3);
  });
}

inline bool verify_ybe(const YBOperator& op, unsigned jobs = 1) {
  return !ybe_violation(op, jobs).has_value();
}

// ---------------------------------------------------------------------------
// Classification

/// Every axiom verdict for an operator, with a witness for each failure.
struct AxiomReport {
  bool invertible = false;
  std::optional<std::pair<Pair, Pair>> collision;
  std::optional<Triple> ybe_witness;
  /// (x, z) such that R1(x, -) does not hit z exactly once.
  std::optional<Pair> left_witness;
  /// (y, w) such that R2(-, y) does not hit w exactly once.
  std::optional<Pair> right_witness;
  /// a without a unique x with R(x, a) = (x, a).
  std::optional<int> type1_witness;
  /// a without a unique x with R(a, x) = (a, x).
  std::optional<int> type1_dual_witness;

  bool ybe() const noexcept { return !ybe_witness; }
  bool yb_set() const noexcept { return invertible && ybe(); }
  bool birack() const noexcept { return yb_set() && !left_witness && !right_witness; }
  bool biquandle() const noexcept { return birack() && !type1_witness; }
};

inline AxiomReport analyze(const YBOperator& op, unsigned jobs = 1) {
  AxiomReport rep;
  const int n = op.size();
  rep.invertible = op.invertible();
  rep.collision = op.collision();
  rep.ybe_witness = ybe_violation(op, jobs);

  for (int x = 0; x < n && !rep.left_witness; ++x) {
    std::vector<int> hits(n, 0);
    for (int y = 0; y < n; ++y) ++hits[op.r1(x, y)];
    for (int z = 0; z < n; ++z)
      if (hits[z] != 1) {
        rep.left_witness = Pair{x, z};
        break;
      }
  }
  for (int y = 0; y < n && !rep.right_witness; ++y) {
    std::vector<int> hits(n, 0);
    for (int x = 0; x < n; ++x) ++hits[op.r2(x, y)];
    for (int w = 0; w < n; ++w)
      if (hits[w] != 1) {
        rep.right_witness = Pair{y, w};
        break;
      }
  }
  for (int a = 0; a < n; ++a) {
    int fixed = 0, dual = 0;
    for (int x = 0; x < n; ++x) {
      if (op(x, a) == Pair{x, a}) ++fixed;
      if (op(a, x) == Pair{a, x}) ++dual;
    }
    if (fixed != 1 && !rep.type1_witness) rep.type1_witness = a;
    if (dual != 1 && !rep.type1_dual_witness) rep.type1_dual_witness = a;
  }
  return rep;
}

/// Classifies a Yang-Baxter set. The type I condition is checked in both
/// orientations; disagreement on a birack is reported as a library bug.
inline StructureClass classify(const YBOperator& op, unsigned jobs = 1) {
  AxiomReport rep = analyze(op, jobs);
  if (!rep.invertible) throw ValidationError("classify: R is not invertible");
  if (!rep.ybe()) throw ValidationError("classify: R does not satisfy the Yang-Baxter equation");
  if (!rep.birack()) return {StructureKind::YBSet, false};
  if (rep.type1_witness.has_value() != rep.type1_dual_witness.has_value())
    throw InternalConsistencyError("type I condition differs between orientations");
  return {rep.biquandle() ? StructureKind::Biquandle : StructureKind::Birack, false};
}

// ---------------------------------------------------------------------------
// Constructors

/// R(x, y) = (y, x * y) for a quandle operation given as mult[x][y] = x * y.
inline YBOperator from_quandle(const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(mult.size());
  if (n == 0) throw StructuralError("empty quandle table");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != n) throw StructuralError("quandle table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw StructuralError("quandle table entry out of range");
  }
  auto pt = [](int x, int y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; };
  for (int x = 0; x < n; ++x)
    if (mult[x][x] != x) throw QuandleAxiomError("idempotence", "x * x != x at x = " + std::to_string(x));
  for (int y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
      if (hit[mult[x][y]])
        throw QuandleAxiomError("right invertibility",
                                "- * " + std::to_string(y) + " is not a bijection");
      hit[mult[x][y]] = true;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mult[mult[x][y]][z] != mult[mult[x][z]][mult[y][z]])
          throw QuandleAxiomError("self-distributivity",
                                  "fails at " + pt(x, y) + " with z = " + std::to_string(z));
  return YBOperator::from_function(n, [&](int x, int y) { return Pair{y, mult[x][y]}; });
}

/// R(x, y) = ((1 - alpha) x + alpha y, beta x + (1 - beta) y) over Z/N.
inline YBOperator alexander_biquandle(int modulus, i64 alpha, i64 beta) {
  if (modulus <= 0) throw ValidationError("modulus must be positive");
  const i64 n = modulus;
  if (std::gcd(mod(alpha, n), n) != 1) throw ValidationError("alpha is not a unit mod N");
  if (std::gcd(mod(beta, n), n) != 1) throw ValidationError("beta is not a unit mod N");
  if (mul_mod(1 - alpha, 1 - beta, n) != 0)
    throw ValidationError("(1 - alpha)(1 - beta) is not 0 mod N");
  return YBOperator::from_function(modulus, [&](int x, int y) {
    return Pair{static_cast<int>(mod((1 - alpha) * x + alpha * y, n)),
                static_cast<int>(mod(beta * x + (1 - beta) * y, n))};
  });
}

// ---------------------------------------------------------------------------
// Twisted structures

/// Witness (x, y) where (f x f) o R and R o (f x f) differ, if any.
inline std::optional<Pair> equivariance_violation(const YBOperator& op, const Twist& f) {
  for (int x = 0; x < op.size(); ++x)
    for (int y = 0; y < op.size(); ++y) {
      auto [a, b] = op(x, y);
      if (op(f(x), f(y)) != Pair{f(a), f(b)}) return Pair{x, y};
    }
  return std::nullopt;
}

/// A Yang-Baxter set with an automorphism f. Validated on construction.
class TwistedYBSet {
 public:
  TwistedYBSet(YBOperator op, Twist twist) : op_(std::move(op)), twist_(std::move(twist)) {
    if (twist_.size() != op_.size()) throw StructuralError("twist and operator sizes differ");
    if (!op_.invertible()) throw ValidationError("R is not invertible on X x X");
    if (auto w = equivariance_violation(op_, twist_)) throw EquivarianceError(w->first, w->second);
    check_derived_squares();
  }

  const YBOperator& op() const noexcept { return op_; }
  const Twist& twist() const noexcept { return twist_; }
  int size() const noexcept { return op_.size(); }

 private:
  // f^-1 with R, f with R-bar and f^-1 with R-bar must commute as well.
  void check_derived_squares() const {
    const int n = op_.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [a, b] = op_(x, y);
        bool ok = op_(twist_.power(-1, x), twist_.power(-1, y)) ==
                  Pair{twist_.power(-1, a), twist_.power(-1, b)};
        auto [c, d] = op_.inverse(x, y);
        ok = ok && op_.inverse(twist_(x), twist_(y)) == Pair{twist_(c), twist_(d)};
        ok = ok && op_.inverse(twist_.power(-1, x), twist_.power(-1, y)) ==
                       Pair{twist_.power(-1, c), twist_.power(-1, d)};
        if (!ok) throw InternalConsistencyError("derived twist squares do not commute");
      }
  }

  YBOperator op_;
  Twist twist_;
};

/// Requires verify_ybe(op); throws EquivarianceError naming a witness pair.
inline TwistedYBSet make_twisted(YBOperator op, Twist f) {
  if (!verify_ybe(op)) throw ValidationError("make_twisted: R does not satisfy the Yang-Baxter equation");
  return TwistedYBSet(std::move(op), std::move(f));
}

inline StructureClass classify(const TwistedYBSet& tw, unsigned jobs = 1) {
  StructureClass c = classify(tw.op(), jobs);
  c.twisted = true;
  return c;
}

/// (x, y) -> (R1(x, f^t y), R2(f^-t x, y)).
inline YBOperator twisted_operator(const TwistedYBSet& tw, i64 t) {
  const YBOperator& r = tw.op();
  const Twist& f = tw.twist();
  YBOperator q = YBOperator::from_function(r.size(), [&](int x, int y) {
    return Pair{r.r1(x, f.power(t, y)), r.r2(f.power(-t, x), y)};
  });
  // The inverse must be (R1bar(x, f^t y), R2bar(f^-t x, y)).
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (!q.invertible() ||
          q.inverse(x, y) != Pair{r.r1inv(x, f.power(t, y)), r.r2inv(f.power(-t, x), y)})
        throw InternalConsistencyError("twisted operator inverse disagrees with the closed form");
  return q;
}

/// The same twist applied to the twisted operator; f commutes with it.
inline TwistedYBSet twisted_set(const TwistedYBSet& tw, i64 t) {
  return TwistedYBSet(twisted_operator(tw, t), tw.twist());
}

/// True iff phi intertwines both R with R' and f with f'.
inline bool is_homomorphism(const TwistedYBSet& src, const TwistedYBSet& dst,
                            const std::vector<int>& phi) {
  const int n = src.size();
  if (static_cast<int>(phi.size()) != n) throw StructuralError("phi must be total on the source");
  for (int v : phi)
    if (v < 0 || v >= dst.size()) throw StructuralError("phi value out of range");
  for (int x = 0; x < n; ++x) {
    if (phi[src.twist()(x)] != dst.twist()(phi[x])) return false;
    for (int y = 0; y < n; ++y) {
      auto [a, b] = src.op()(x, y);
      if (dst.op()(phi[x], phi[y]) != Pair{phi[a], phi[b]}) return false;
    }
  }
  return true;
}

}  // namespace twyb
