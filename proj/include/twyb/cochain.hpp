#pragma once

// Twisted chain complexes of a twisted Yang-Baxter set with coefficients in
// Z/N, T acting as multiplication by a unit u.
//
// Chains are kept in a formal representation: every boundary term stores the
// untwisted tuple together with the exponent of T in front of it. In
// coordinate mode T acts on tuples through f, and `realize_exponents` turns
// the exponents into powers of f. In scalar mode T acts freely on chains.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twyb/error.hpp"
#include "twyb/modular.hpp"
#include "twyb/parallel.hpp"
#include "twyb/yb_core.hpp"
#include "twyb/zn_linalg.hpp"

namespace twyb {

using Tuple = std::vector<int>;

/// Z/N as a Z[T, T^-1]-module with T m = u m.
struct CoefficientModule {
  i64 modulus = 1;
  i64 unit = 1;
  i64 unit_inv = 1;
  i64 t_order = 1;

  CoefficientModule() = default;
  CoefficientModule(i64 n, i64 u) : modulus(n), unit(mod(u, n > 0 ? n : 1)) {
    if (n <= 0) throw ValidationError("coefficient modulus must be positive");
    auto inv = inverse_mod(unit, n);
    if (!inv) throw ValidationError("T must act by a unit: gcd(u, N) != 1");
    unit_inv = *inv;
    t_order = multiplicative_order(unit, n);
  }

  /// T^k m.
  i64 act(i64 k, i64 m) const { return mul_mod(pow_mod(unit, k, modulus), mod(m, modulus), modulus); }
  i64 power(i64 k) const { return pow_mod(unit, k, modulus); }

  friend bool operator==(const CoefficientModule&, const CoefficientModule&) = default;
};

enum class Variant { TYB, TD, TBQ };
enum class TwistMode { Coordinate, Scalar };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::TYB: return "TYB";
    case Variant::TD: return "TD";
    case Variant::TBQ: return "TBQ";
  }
  return "?";
}

inline std::string to_string(TwistMode m) { return m == TwistMode::Coordinate ? "coordinate" : "scalar"; }

struct TwistParams {
  i64 t = 0;
  i64 m1 = 0;
  i64 m2 = 0;
  Variant variant = Variant::TYB;
  TwistMode mode = TwistMode::Coordinate;

  void validate() const {
    if (mode == TwistMode::Scalar && m1 != 0) throw ValidationError("scalar twist mode requires m1 = 0");
  }
};

// ---------------------------------------------------------------------------
// Tuples

/// |X|^n, guarded against overflow and against `limit`.
inline std::uint64_t tuple_count(int size, int n, std::uint64_t limit = std::uint64_t{1} << 40) {
  if (n < 0) throw StructuralError("negative degree");
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    if (c > limit / static_cast<std::uint64_t>(size))
      throw SizeGuardError("|X|^" + std::to_string(n) + " exceeds the size guard");
    c *= static_cast<std::uint64_t>(size);
  }
  return c;
}

/// Lexicographic rank; the first coordinate is most significant.
inline std::uint64_t tuple_rank(const Tuple& x, int size) {
  std::uint64_t r = 0;
  for (int v : x) {
    if (v < 0 || v >= size) throw StructuralError("tuple entry out of range");
    r = r * static_cast<std::uint64_t>(size) + static_cast<std::uint64_t>(v);
  }
  return r;
}

inline Tuple tuple_unrank(std::uint64_t rank, int n, int size) {
  Tuple x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    x[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(size));
    rank /= static_cast<std::uint64_t>(size);
  }
  return x;
}

inline Tuple twist_tuple(const Twist& f, i64 k, Tuple x) {
  for (auto& v : x) v = f.power(k, v);
  return x;
}

inline std::string format_tuple(const Tuple& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + std::to_string(x[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Face maps over an arbitrary value type

/// One boundary term: coeff * T^exponent * tuple.
template <class V>
struct GenericTerm {
  std::vector<V> tuple;
  int coeff = 1;
  i64 exponent = 0;
};

namespace faces {

/// Strand i (1-based) slides left; cross(a, b) returns Q(a, b) as a pair.
template <class V, class Cross>
std::vector<V> slide_left(std::vector<V> x, std::size_t i, Cross&& cross) {
  if (i < 1 || i > x.size()) throw StructuralError("face index out of range");
  V moving = x[i - 1];
  for (std::size_t j = i - 1; j-- > 0;) {
    auto [a, b] = cross(x[j], moving);
    moving = a;
    x[j] = b;
  }
  x.erase(x.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return x;
}

/// Strand i (1-based) slides right.
template <class V, class Cross>
std::vector<V> slide_right(std::vector<V> x, std::size_t i, Cross&& cross) {
  if (i < 1 || i > x.size()) throw StructuralError("face index out of range");
  V moving = x[i - 1];
  for (std::size_t j = i; j < x.size(); ++j) {
    auto [a, b] = cross(moving, x[j]);
    x[j] = a;
    moving = b;
  }
  x.erase(x.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return x;
}

/// sum_i (-1)^i (T^m1 left_i - T^m2 right_i), in face order.
template <class V, class Cross>
std::vector<GenericTerm<V>> boundary_terms(const std::vector<V>& x, Cross&& cross, i64 m1, i64 m2) {
  std::vector<GenericTerm<V>> out;
  out.reserve(2 * x.size());
  for (std::size_t i = 1; i <= x.size(); ++i) {
    int s = (i % 2 == 1) ? -1 : 1;
    out.push_back({slide_left(x, i, cross), s, m1});
    out.push_back({slide_right(x, i, cross), -s, m2});
  }
  return out;
}

}  // namespace faces

// ---------------------------------------------------------------------------
// Formal chains and cochains

using ChainTerm = GenericTerm<int>;

/// An element of the free Z[T, T^-1]-module on tuples of one arity.
struct FormalChain {
  int degree = 0;
  std::vector<ChainTerm> terms;

  /// Like terms (same tuple and exponent) merged; zero terms dropped; sorted.
  FormalChain combined() const {
    std::map<std::pair<Tuple, i64>, int> acc;
    for (const auto& t : terms) acc[{t.tuple, t.exponent}] += t.coeff;
    FormalChain out{degree, {}};
    for (auto& [key, c] : acc)
      if (c != 0) out.terms.push_back({key.first, c, key.second});
    return out;
  }

  /// Exponents turned into powers of f acting on coordinates.
  FormalChain realize_exponents(const Twist& f) const {
    FormalChain out{degree, {}};
    for (const auto& t : terms) out.terms.push_back({twist_tuple(f, t.exponent, t.tuple), t.coeff, 0});
    return out.combined();
  }

  bool is_zero() const { return combined().terms.empty(); }

  /// sum coeff * u^exponent * value(tuple) in Z/N.
  template <class Value>
  i64 evaluate(Value&& value, const CoefficientModule& m) const {
    i64 acc = 0;
    for (const auto& t : terms) acc = mod(acc + mul_mod(t.coeff, m.act(t.exponent, value(t.tuple)), m.modulus), m.modulus);
    return acc;
  }
};

/// A map X^n -> Z/N stored densely by lexicographic tuple rank.
struct Cochain {
  int degree = 0;
  int size = 1;
  i64 modulus = 1;
  std::vector<i64> values;

  Cochain() = default;
  Cochain(int degree_, int size_, i64 modulus_)
      : degree(degree_), size(size_), modulus(modulus_), values(tuple_count(size_, degree_), 0) {}

  i64 operator()(const Tuple& x) const {
    if (static_cast<int>(x.size()) != degree) throw StructuralError("cochain evaluated on a tuple of the wrong arity");
    return values[tuple_rank(x, size)];
  }
  void set(const Tuple& x, i64 v) { values[tuple_rank(x, size)] = mod(v, modulus); }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](i64 v) { return v == 0; });
  }

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

struct ComplexOptions {
  /// Largest matrix (rows * cols) the solvers will build.
  std::uint64_t max_matrix_entries = std::uint64_t{1} << 27;
  unsigned jobs = 1;
};

// ---------------------------------------------------------------------------
// The complex

/// Face maps and bases of the complex selected by TwistParams. Crossings use
/// the twisted operator Q = T^t R; degeneracy is tested against Q.
class TwistedComplex {
  struct Cross;

 public:
  TwistedComplex(const TwistedYBSet& tw, TwistParams params, ComplexOptions opts = {})
      : tw_(tw), params_(params), opts_(opts), q_(params.t == 0 ? tw.op() : twisted_operator(tw, params.t)) {
    params_.validate();
    if (params_.variant != Variant::TYB && !analyze(tw_.op()).biquandle())
      throw ValidationError("the degenerate subcomplex requires a twisted biquandle");
  }

  const TwistedYBSet& structure() const noexcept { return tw_; }
  const TwistParams& params() const noexcept { return params_; }
  const ComplexOptions& options() const noexcept { return opts_; }
  const YBOperator& crossing() const noexcept { return q_; }
  int size() const noexcept { return tw_.size(); }

  Tuple face_left_untwisted(std::size_t i, const Tuple& x) const { return faces::slide_left(x, i, cross()); }
  Tuple face_right_untwisted(std::size_t i, const Tuple& x) const { return faces::slide_right(x, i, cross()); }

  /// Left face; in coordinate mode f^m1 is applied to the remaining coordinates.
  Tuple face_left(std::size_t i, const Tuple& x) const {
    Tuple y = face_left_untwisted(i, x);
    return params_.mode == TwistMode::Coordinate ? twist_tuple(tw_.twist(), params_.m1, std::move(y)) : y;
  }
  /// Right face; in coordinate mode f^m2 is applied to the remaining coordinates.
  Tuple face_right(std::size_t i, const Tuple& x) const {
    Tuple y = face_right_untwisted(i, x);
    return params_.mode == TwistMode::Coordinate ? twist_tuple(tw_.twist(), params_.m2, std::move(y)) : y;
  }

  /// Boundary of a tuple, untwisted tuples with T-exponents. Degree 1 maps to C_0 = 0.
  FormalChain boundary(const Tuple& x) const {
    FormalChain c{static_cast<int>(x.size()) - 1, {}};
    if (x.size() < 2) return c;
    c.terms = faces::boundary_terms(x, cross(), params_.m1, params_.m2);
    return c;
  }

  /// Boundary of a formal chain (linear, commutes with T).
  FormalChain boundary(const FormalChain& c) const {
    FormalChain out{c.degree - 1, {}};
    for (const auto& t : c.terms)
      for (auto& s : boundary(t.tuple).terms) out.terms.push_back({std::move(s.tuple), s.coeff * t.coeff, s.exponent + t.exponent});
    return out;
  }

  /// The chain as an element of the free abelian group on tuples: in
  /// coordinate mode T^e w becomes f^e w; in scalar mode nothing changes.
  FormalChain realize(const FormalChain& c) const {
    return params_.mode == TwistMode::Coordinate ? c.realize_exponents(tw_.twist()) : c.combined();
  }

  /// Some consecutive pair is fixed by Q.
  bool is_degenerate(const Tuple& x) const {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (q_(x[i], x[i + 1]) == Pair{x[i], x[i + 1]}) return true;
    return false;
  }

  bool in_variant(const Tuple& x) const {
    switch (params_.variant) {
      case Variant::TYB: return true;
      case Variant::TD: return is_degenerate(x);
      case Variant::TBQ: return !is_degenerate(x);
    }
    return true;
  }

  /// Ranks of the basis tuples of degree n in increasing order. C_0 = 0.
  std::vector<std::uint64_t> basis(int n) const {
    std::vector<std::uint64_t> out;
    if (n <= 0) return out;
    std::uint64_t total = tuple_count(size(), n);
    for (std::uint64_t r = 0; r < total; ++r)
      if (params_.variant == Variant::TYB || in_variant(tuple_unrank(r, n, size()))) out.push_back(r);
    return out;
  }

 private:
  struct Cross {
    const YBOperator* q;
    Pair operator()(int a, int b) const { return (*q)(a, b); }
  };
  Cross cross() const { return Cross{&q_}; }

  TwistedYBSet tw_;
  TwistParams params_;
  ComplexOptions opts_;
  YBOperator q_;
};

// Free-function forms of the face maps.
inline Tuple face_left(const TwistedYBSet& tw, const TwistParams& p, std::size_t i, const Tuple& x) {
  return TwistedComplex(tw, p).face_left(i, x);
}
inline Tuple face_right(const TwistedYBSet& tw, const TwistParams& p, std::size_t i, const Tuple& x) {
  return TwistedComplex(tw, p).face_right(i, x);
}
inline FormalChain boundary(const TwistedYBSet& tw, const TwistParams& p, const Tuple& x) {
  return TwistedComplex(tw, p).boundary(x);
}

// ---------------------------------------------------------------------------
// Structural checks

/// A failing instance of d^k_i d^l_j = d^l_{j-1} d^k_i (i < j); k, l are 'l' or 'r'.
struct PrecubicalWitness {
  Tuple tuple;
  std::size_t i = 0, j = 0;
  char k = 'l', l = 'l';
};

struct PrecubicalReport {
  std::optional<PrecubicalWitness> witness;
  explicit operator bool() const noexcept { return !witness; }
};

inline PrecubicalReport precubical_check(const TwistedComplex& cx, int n) {
  PrecubicalReport rep;
  if (n < 2) return rep;
  auto face = [&](char side, std::size_t i, const Tuple& x) {
    return side == 'l' ? cx.face_left(i, x) : cx.face_right(i, x);
  };
  const std::uint64_t total = tuple_count(cx.size(), n);
  for (std::uint64_t r = 0; r < total; ++r) {
    Tuple x = tuple_unrank(r, n, cx.size());
    for (std::size_t j = 2; j <= static_cast<std::size_t>(n); ++j)
      for (std::size_t i = 1; i < j; ++i)
        for (char k : {'l', 'r'})
          for (char l : {'l', 'r'})
            if (face(k, i, face(l, j, x)) != face(l, j - 1, face(k, i, x))) {
              rep.witness = PrecubicalWitness{x, i, j, k, l};
              return rep;
            }
  }
  return rep;
}

inline PrecubicalReport precubical_check(const TwistedYBSet& tw, const TwistParams& p, int n) {
  return precubical_check(TwistedComplex(tw, p), n);
}

/// First tuple of degree n whose double boundary is nonzero, both formally
/// and after realizing T; nullopt when the square vanishes everywhere.
inline std::optional<Tuple> boundary_square_violation(const TwistedComplex& cx, int n) {
  if (n < 3) return std::nullopt;
  const std::uint64_t total = tuple_count(cx.size(), n);
  for (std::uint64_t r = 0; r < total; ++r) {
    Tuple x = tuple_unrank(r, n, cx.size());
    FormalChain dd = cx.boundary(cx.boundary(x));
    if (!dd.is_zero() || !cx.realize(dd).terms.empty()) return x;
  }
  return std::nullopt;
}

/// A degenerate tuple of degree n whose realized boundary leaves the
/// degenerate subcomplex, if any.
inline std::optional<Tuple> degenerate_closure_violation(const TwistedComplex& cx, int n) {
  const std::uint64_t total = tuple_count(cx.size(), n);
  for (std::uint64_t r = 0; r < total; ++r) {
    Tuple x = tuple_unrank(r, n, cx.size());
    if (!cx.is_degenerate(x)) continue;
    for (const auto& t : cx.realize(cx.boundary(x)).terms)
      if (!cx.is_degenerate(t.tuple)) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matrices

namespace detail {

inline void guard(const TwistedComplex& cx, std::size_t rows, std::size_t cols) {
  if (static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols) > cx.options().max_matrix_entries)
    throw SizeGuardError("matrix of size " + std::to_string(rows) + " x " + std::to_string(cols) +
                         " exceeds the size guard");
}

/// rank -> position in `basis`, or -1.
inline std::vector<std::int64_t> basis_index(const std::vector<std::uint64_t>& basis, std::uint64_t total) {
  std::vector<std::int64_t> idx(total, -1);
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<std::int64_t>(i);
  return idx;
}

inline void require_degenerate_closure(const TwistedComplex& cx, int n) {
  if (cx.params().variant == Variant::TYB || n < 2) return;
  if (auto w = degenerate_closure_violation(cx, n))
    throw InternalConsistencyError("boundary of degenerate tuple " + format_tuple(*w) +
                                   " leaves the degenerate subcomplex");
}

}  // namespace detail

/// Matrix of d_n : C_n -> C_{n-1} in the variant bases; entry coeff * u^exponent.
inline ZnMatrix boundary_matrix(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  const auto cols = cx.basis(n);
  const auto rows = cx.basis(n - 1);
  detail::guard(cx, rows.size(), cols.size());
  ZnMatrix d(rows.size(), cols.size(), m.modulus);
  if (n < 2) return d;
  const auto index = detail::basis_index(rows, tuple_count(cx.size(), n - 1));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& t : cx.boundary(tuple_unrank(cols[c], n, cx.size())).terms) {
      std::int64_t r = index[tuple_rank(t.tuple, cx.size())];
      if (r >= 0) d.add(static_cast<std::size_t>(r), c, t.coeff * m.power(t.exponent));
    }
  return d;
}

/// Matrix of delta^n : C^n -> C^{n+1}: rows are the degree n+1 basis tuples,
/// columns the degree n basis tuples.
inline ZnMatrix coboundary_matrix(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  const auto cols = cx.basis(n);
  const auto rows = cx.basis(n + 1);
  detail::guard(cx, rows.size(), cols.size());
  ZnMatrix d(rows.size(), cols.size(), m.modulus);
  if (n < 1) return d;
  const auto index = detail::basis_index(cols, tuple_count(cx.size(), n));
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, i64>>> parts(std::max(1u, cx.options().jobs));
  parallel_chunks(rows.size(), cx.options().jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r)
      for (const auto& t : cx.boundary(tuple_unrank(rows[r], n + 1, cx.size())).terms) {
        std::int64_t c = index[tuple_rank(t.tuple, cx.size())];
        if (c >= 0) parts[chunk].emplace_back(r, static_cast<std::size_t>(c), t.coeff * m.power(t.exponent));
      }
  });
  for (const auto& part : parts)
    for (const auto& [r, c, v] : part) d.add(r, c, v);
  return d;
}

inline ZnMatrix coboundary_matrix(const TwistedYBSet& tw, const TwistParams& p, int n, const CoefficientModule& m) {
  return coboundary_matrix(TwistedComplex(tw, p), n, m);
}

/// Rows phi(f x) - u phi(x) over the degree n basis; empty in scalar mode,
/// where T acts freely and every map is a module homomorphism.
inline ZnMatrix equivariance_matrix(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  const auto b = cx.basis(n);
  if (cx.params().mode == TwistMode::Scalar || n < 1) return ZnMatrix(0, b.size(), m.modulus);
  const auto index = detail::basis_index(b, tuple_count(cx.size(), n));
  ZnMatrix e(b.size(), b.size(), m.modulus);
  for (std::size_t i = 0; i < b.size(); ++i) {
    Tuple fx = twist_tuple(cx.structure().twist(), 1, tuple_unrank(b[i], n, cx.size()));
    std::int64_t j = index[tuple_rank(fx, cx.size())];
    if (j < 0) throw InternalConsistencyError("twist does not preserve the variant basis");
    e.add(i, static_cast<std::size_t>(j), 1);
    e.add(i, i, -m.unit);
  }
  return e;
}

/// Columns e_{f x} - u e_x spanning the relations of C_n tensored with M.
inline ZnMatrix chain_relations(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  ZnMatrix e = equivariance_matrix(cx, n, m);
  return e.transpose();
}

// ---------------------------------------------------------------------------
// Cochain evaluation

inline Cochain cochain_from_basis_vector(const TwistedComplex& cx, int n, const std::vector<i64>& v,
                                         const CoefficientModule& m) {
  const auto b = cx.basis(n);
  Cochain c(n, cx.size(), m.modulus);
  for (std::size_t i = 0; i < b.size(); ++i) c.values[b[i]] = mod(v[i], m.modulus);
  return c;
}

/// First tuple x (with its image) where c(f x) != u c(x).
inline std::optional<Tuple> equivariance_violation(const Cochain& c, const Twist& f, const CoefficientModule& m) {
  const std::uint64_t total = tuple_count(c.size, c.degree);
  for (std::uint64_t r = 0; r < total; ++r) {
    Tuple x = tuple_unrank(r, c.degree, c.size);
    if (c(twist_tuple(f, 1, x)) != mul_mod(m.unit, c.values[r], m.modulus)) return x;
  }
  return std::nullopt;
}

/// delta c evaluated on the degree n+1 basis tuples, zero elsewhere.
inline Cochain apply_coboundary(const TwistedComplex& cx, const Cochain& c, const CoefficientModule& m) {
  if (c.size != cx.size() || c.modulus != m.modulus) throw StructuralError("cochain does not match the complex");
  if (cx.params().mode == TwistMode::Coordinate)
    if (auto w = equivariance_violation(c, cx.structure().twist(), m))
      throw ValidationError("cochain is not T-equivariant at " + format_tuple(*w));
  Cochain out(c.degree + 1, c.size, m.modulus);
  if (c.degree < 1) return out;
  auto value = [&](const Tuple& x) { return cx.in_variant(x) ? c(x) : i64{0}; };
  for (std::uint64_t r : cx.basis(c.degree + 1))
    out.values[r] = cx.boundary(tuple_unrank(r, c.degree + 1, c.size)).evaluate(value, m);
  return out;
}

struct CocycleCheck {
  bool ok = true;
  std::string reason;
  Tuple witness;
  explicit operator bool() const noexcept { return ok; }
};

/// delta c = 0 in the selected complex. The cochain must vanish off the
/// variant basis (for TBQ: on degenerate tuples) and, in coordinate mode,
/// commute with T.
inline CocycleCheck cocycle_check(const TwistedComplex& cx, const Cochain& c, const CoefficientModule& m) {
  if (c.size != cx.size()) throw StructuralError("cochain carrier size does not match the structure");
  if (c.modulus != m.modulus) throw StructuralError("cochain modulus does not match the coefficient module");
  if (c.values.size() != tuple_count(c.size, c.degree)) throw StructuralError("cochain has the wrong number of values");
  const std::uint64_t total = tuple_count(c.size, c.degree);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (c.values[r] == 0) continue;
    Tuple x = tuple_unrank(r, c.degree, c.size);
    if (!cx.in_variant(x))
      return {false, cx.params().variant == Variant::TBQ ? "nonzero on a degenerate tuple" : "nonzero outside the degenerate subcomplex", x};
  }
  if (cx.params().mode == TwistMode::Coordinate)
    if (auto w = equivariance_violation(c, cx.structure().twist(), m)) return {false, "not T-equivariant", *w};
  if (c.degree < 1) return {};
  auto value = [&](const Tuple& x) { return c(x); };
  for (std::uint64_t r : cx.basis(c.degree + 1)) {
    Tuple w = tuple_unrank(r, c.degree + 1, c.size);
    if (cx.boundary(w).evaluate(value, m) != 0) return {false, "coboundary is nonzero", w};
  }
  return {};
}

inline CocycleCheck cocycle_check(const TwistedYBSet& tw, const TwistParams& p, const Cochain& c,
                                  const CoefficientModule& m) {
  return cocycle_check(TwistedComplex(tw, p), c, m);
}

// ---------------------------------------------------------------------------
// Cohomology and homology

/// A finite abelian group recorded as a list of cyclic orders (all > 1).
struct ModuleShape {
  std::vector<i64> orders;

  /// Number of cyclic factors; the dimension when N is prime.
  std::size_t rank() const noexcept { return orders.size(); }
  std::vector<i64> elementary() const { return elementary_divisors(orders); }
  friend bool operator==(const ModuleShape& a, const ModuleShape& b) { return a.elementary() == b.elementary(); }
};

struct CohomologyResult {
  int degree = 0;
  i64 modulus = 1;
  ModuleShape cocycles;
  ModuleShape coboundaries;
  ModuleShape cohomology;
  std::optional<ModuleShape> homology;
  /// Generators of Z^n as cochains, with their additive orders.
  std::vector<Cochain> basis;
  std::vector<i64> basis_orders;

  std::size_t dim_cocycles() const noexcept { return cocycles.rank(); }
  std::size_t dim_coboundaries() const noexcept { return coboundaries.rank(); }
  std::size_t betti() const {
    if (!is_prime(modulus)) throw ValidationError("betti numbers need a prime modulus; use the elementary divisors");
    return cohomology.rank();
  }
  std::size_t homology_betti() const {
    if (!is_prime(modulus)) throw ValidationError("betti numbers need a prime modulus; use the elementary divisors");
    if (!homology) throw ValidationError("homology was not computed");
    return homology->rank();
  }
};

/// Z^n = ker delta^n among T-equivariant cochains, B^n = delta(C^{n-1}), H^n = Z^n / B^n.
inline CohomologyResult cohomology(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  CohomologyResult res;
  res.degree = n;
  res.modulus = m.modulus;
  if (n < 1) return res;
  detail::require_degenerate_closure(cx, n + 1);
  ZnMatrix a = ZnMatrix::vstack(coboundary_matrix(cx, n, m), equivariance_matrix(cx, n, m));

  CyclicDecomposition z = kernel(a);
  res.cocycles.orders = z.orders;
  res.basis_orders = z.orders;
  for (const auto& g : z.generators) res.basis.push_back(cochain_from_basis_vector(cx, n, g, m));

  std::vector<std::vector<i64>> b_gens;
  if (n >= 2) {
    ZnMatrix prev = coboundary_matrix(cx, n - 1, m);
    for (const auto& g : kernel(equivariance_matrix(cx, n - 1, m)).generators) b_gens.push_back(prev.apply(g));
  }
  res.coboundaries.orders = span_orders(ZnMatrix::from_columns(b_gens, a.cols(), m.modulus));
  res.cohomology.orders = subquotient_orders(a, b_gens);
  return res;
}

/// Cocycle space only (cohomology computes it as well).
inline CohomologyResult cocycle_space(const TwistedYBSet& tw, const TwistParams& p, int n, const CoefficientModule& m) {
  return cohomology(TwistedComplex(tw, p), n, m);
}

/// H_n of C_n tensored with M: ker d_n modulo (relations + im d_{n+1}).
inline ModuleShape homology(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  ModuleShape out;
  if (n < 1) return out;
  detail::require_degenerate_closure(cx, n + 1);
  ZnMatrix p = annihilating_projection(chain_relations(cx, n - 1, m));
  ZnMatrix a = p * boundary_matrix(cx, n, m);
  std::vector<std::vector<i64>> b_gens;
  ZnMatrix rel = chain_relations(cx, n, m);
  for (std::size_t j = 0; j < rel.cols(); ++j) b_gens.push_back(rel.column(j));
  ZnMatrix up = boundary_matrix(cx, n + 1, m);
  for (std::size_t j = 0; j < up.cols(); ++j) b_gens.push_back(up.column(j));
  out.orders = subquotient_orders(a, b_gens);
  return out;
}

/// Cohomology together with homology in degree n.
inline CohomologyResult homology_dims(const TwistedComplex& cx, int n, const CoefficientModule& m) {
  CohomologyResult res = cohomology(cx, n, m);
  res.homology = homology(cx, n, m);
  return res;
}

inline CohomologyResult homology_dims(const TwistedYBSet& tw, const TwistParams& p, int n, const CoefficientModule& m) {
  return homology_dims(TwistedComplex(tw, p), n, m);
}

}  // namespace twyb
