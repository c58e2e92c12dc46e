#pragma once

// Linear algebra over the ring Z/N: Smith normal form with transforms,
// kernels, span membership and the structure of subquotients Z/B.
//
// Every diagonal entry produced here is normalized to a divisor of N; the
// value N stands for a zero entry. A cyclic factor is reported by its order.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "twyb/error.hpp"
#include "twyb/modular.hpp"

namespace twyb {

class ZnMatrix {
 public:
  ZnMatrix() = default;
  ZnMatrix(std::size_t rows, std::size_t cols, i64 modulus)
      : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    if (modulus <= 0) throw ValidationError("modulus must be positive");
  }

  static ZnMatrix identity(std::size_t n, i64 modulus) {
    ZnMatrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  /// Columns given as vectors of equal length.
  static ZnMatrix from_columns(const std::vector<std::vector<i64>>& cols, std::size_t rows, i64 modulus) {
    ZnMatrix m(rows, cols.size(), modulus);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw StructuralError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  i64 modulus() const noexcept { return modulus_; }

  i64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, i64 v) { data_[r * cols_ + c] = mod(v, modulus_); }
  void add(std::size_t r, std::size_t c, i64 v) { set(r, c, data_[r * cols_ + c] + mod(v, modulus_)); }

  std::vector<i64> column(std::size_t c) const {
    std::vector<i64> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](i64 v) { return v == 0; });
  }

  std::vector<i64> apply(const std::vector<i64>& v) const {
    if (v.size() != cols_) throw StructuralError("vector length does not match matrix columns");
    std::vector<i64> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      __int128 acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<__int128>(data_[r * cols_ + c]) * v[c];
      out[r] = static_cast<i64>(acc % modulus_);
    }
    return out;
  }

  ZnMatrix transpose() const {
    ZnMatrix t(cols_, rows_, modulus_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  friend ZnMatrix operator*(const ZnMatrix& a, const ZnMatrix& b) {
    if (a.cols_ != b.rows_ || a.modulus_ != b.modulus_) throw StructuralError("matrix product shape mismatch");
    ZnMatrix out(a.rows_, b.cols_, a.modulus_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        i64 aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out.data_[i * b.cols_ + j] = (out.data_[i * b.cols_ + j] + aik * b(k, j)) % a.modulus_;
      }
    return out;
  }

  friend ZnMatrix operator*(i64 s, const ZnMatrix& m) {
    ZnMatrix out = m;
    for (auto& v : out.data_) v = mul_mod(v, s, m.modulus_);
    return out;
  }

  /// [top; bottom]
  static ZnMatrix vstack(const ZnMatrix& top, const ZnMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw StructuralError("vstack column mismatch");
    ZnMatrix out(top.rows_ + bottom.rows_, top.cols_, top.modulus_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
    return out;
  }

  friend bool operator==(const ZnMatrix&, const ZnMatrix&) = default;

  // Elementary operations used by the Smith reduction.
  void row_combine(std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s) {
    for (std::size_t c = 0; c < cols_; ++c) {
      i64 a = data_[i * cols_ + c], b = data_[j * cols_ + c];
      if (a == 0 && b == 0) continue;
      data_[i * cols_ + c] = lin(p, a, q, b);
      data_[j * cols_ + c] = lin(r, a, s, b);
    }
  }
  void col_combine(std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s) {
    for (std::size_t row = 0; row < rows_; ++row) {
      i64 a = data_[row * cols_ + i], b = data_[row * cols_ + j];
      if (a == 0 && b == 0) continue;
      data_[row * cols_ + i] = lin(p, a, q, b);
      data_[row * cols_ + j] = lin(r, a, s, b);
    }
  }
  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
  }
  void row_scale(std::size_t i, i64 v) {
    for (std::size_t c = 0; c < cols_; ++c) data_[i * cols_ + c] = mul_mod(data_[i * cols_ + c], v, modulus_);
  }
  void col_scale(std::size_t j, i64 v) {
    for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + j] = mul_mod(data_[r * cols_ + j], v, modulus_);
  }

 private:
  i64 lin(i64 p, i64 a, i64 q, i64 b) const {
    __int128 v = static_cast<__int128>(mod(p, modulus_)) * a + static_cast<__int128>(mod(q, modulus_)) * b;
    return static_cast<i64>(v % modulus_);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  i64 modulus_ = 1;
  std::vector<i64> data_;
};

/// U * A * V = D with U, V invertible over Z/N.
struct SmithDecomposition {
  ZnMatrix u;  // only populated when requested
  ZnMatrix v;
  ZnMatrix v_inv;
  /// One entry per column of A: the diagonal entry (a divisor of N, N meaning
  /// zero) for the first min(rows, cols) columns, N for the rest.
  std::vector<i64> diag;
  std::size_t rows = 0;
};

namespace detail {

/// (g, v) with g = gcd(a, N) (N when a = 0) and v a unit with a v = g mod N.
inline std::pair<i64, i64> normalize_unit(i64 a, i64 n) {
  a = mod(a, n);
  if (a == 0) return {n, 1};
  i64 g = std::gcd(a, n);
  i64 np = n / g;
  i64 w = np == 1 ? 0 : *inverse_mod(a / g, np);
  for (i64 k = 0; k < g; ++k) {
    i64 v = w + k * np;
    if (std::gcd(v, n) == 1) return {g, v};
  }
  throw InternalConsistencyError("no unit lift found");
}

}  // namespace detail

inline SmithDecomposition smith(const ZnMatrix& a, bool want_u = false) {
  const i64 n = a.modulus();
  const std::size_t rows = a.rows(), cols = a.cols();
  ZnMatrix w = a;
  SmithDecomposition out;
  out.rows = rows;
  out.v = ZnMatrix::identity(cols, n);
  out.v_inv = ZnMatrix::identity(cols, n);
  if (want_u) out.u = ZnMatrix::identity(rows, n);

  auto rows_op = [&](std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s) {
    w.row_combine(i, j, p, q, r, s);
    if (want_u) out.u.row_combine(i, j, p, q, r, s);
  };
  // Column op with determinant 1; V gets the same op, V^-1 the inverse as rows.
  auto cols_op = [&](std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s) {
    w.col_combine(i, j, p, q, r, s);
    out.v.col_combine(i, j, p, q, r, s);
    out.v_inv.row_combine(i, j, s, -r, -q, p);
  };

  const std::size_t steps = std::min(rows, cols);
  out.diag.assign(cols, n);
  for (std::size_t k = 0; k < steps; ++k) {
    // Pivot: entry generating the largest ideal; first in column-major order on ties.
    std::size_t pr = rows, pc = cols;
    i64 best = n + 1;
    for (std::size_t c = k; c < cols && best != 1; ++c)
      for (std::size_t r = k; r < rows; ++r) {
        i64 v = w(r, c);
        if (v == 0) continue;
        i64 g = std::gcd(v, n);
        if (g < best) {
          best = g;
          pr = r;
          pc = c;
          if (g == 1) break;
        }
      }
    if (pr == rows) break;
    if (pr != k) {
      w.row_swap(pr, k);
      if (want_u) out.u.row_swap(pr, k);
    }
    if (pc != k) {
      w.col_swap(pc, k);
      out.v.col_swap(pc, k);
      out.v_inv.row_swap(pc, k);
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      auto [g, unit] = detail::normalize_unit(w(k, k), n);
      if (unit != 1) {
        w.row_scale(k, unit);
        if (want_u) out.u.row_scale(k, unit);
      }
      for (std::size_t r = k + 1; r < rows; ++r) {
        i64 b = w(r, k);
        if (b == 0) continue;
        if (b % g == 0) {
          rows_op(k, r, 1, 0, -(b / g), 1);
        } else {
          ExtGcd e = ext_gcd(g, b);
          rows_op(k, r, e.s, e.t, -(b / e.g), g / e.g);
          g = e.g;
          dirty = true;
        }
      }
      if (dirty) continue;
      for (std::size_t c = k + 1; c < cols; ++c) {
        i64 b = w(k, c);
        if (b == 0) continue;
        if (b % g == 0) {
          cols_op(k, c, 1, 0, -(b / g), 1);
        } else {
          ExtGcd e = ext_gcd(g, b);
          // new col_k = s col_k + t col_c ; new col_c = -(b/g') col_k + (g/g') col_c
          cols_op(k, c, e.s, e.t, -(b / e.g), g / e.g);
          g = e.g;
          dirty = true;
        }
      }
    }
    out.diag[k] = detail::normalize_unit(w(k, k), n).first;
  }
  return out;
}

/// Generators of a submodule of (Z/N)^k together with their additive orders;
/// the submodule is the internal direct sum of the cyclic groups they span.
struct CyclicDecomposition {
  std::vector<std::vector<i64>> generators;
  std::vector<i64> orders;
};

/// ker A as a direct sum of cyclic groups.
inline CyclicDecomposition kernel(const ZnMatrix& a) {
  SmithDecomposition s = smith(a);
  const i64 n = a.modulus();
  CyclicDecomposition out;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    i64 d = s.diag[i];
    if (d == 1) continue;
    std::vector<i64> g = s.v.column(i);
    i64 scale = n / d;
    for (auto& x : g) x = mul_mod(x, scale, n);
    out.generators.push_back(std::move(g));
    out.orders.push_back(d);
  }
  return out;
}

/// Orders of the cyclic factors of coker(A) = (Z/N)^rows / im A, factors of order 1 dropped.
inline std::vector<i64> cokernel_orders(const ZnMatrix& a) {
  const i64 n = a.modulus();
  std::vector<i64> out;
  if (a.cols() == 0) return std::vector<i64>(a.rows(), n);
  SmithDecomposition s = smith(a);
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < steps; ++i)
    if (s.diag[i] != 1) out.push_back(s.diag[i]);
  for (std::size_t i = steps; i < a.rows(); ++i) out.push_back(n);
  return out;
}

/// Matrix P with ker P = span of the given columns.
inline ZnMatrix annihilating_projection(const ZnMatrix& gens) {
  const i64 n = gens.modulus();
  if (gens.cols() == 0) return ZnMatrix::identity(gens.rows(), n);
  SmithDecomposition s = smith(gens, true);
  ZnMatrix p = s.u;
  const std::size_t steps = std::min(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < steps; ++i) p.row_scale(i, n / s.diag[i]);
  return p;
}

/// True iff v lies in the span of the columns of gens.
inline bool in_span(const ZnMatrix& gens, const std::vector<i64>& v) {
  const i64 n = gens.modulus();
  if (v.size() != gens.rows()) throw StructuralError("vector length does not match generator rows");
  if (gens.cols() == 0) return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
  SmithDecomposition s = smith(gens, true);
  std::vector<i64> uv = s.u.apply(v);
  const std::size_t steps = std::min(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    i64 d = i < steps ? s.diag[i] : n;
    if (uv[i] % d != 0) return false;
  }
  return true;
}

/// Orders of the cyclic factors of Z/B where Z = ker A and B is spanned by
/// `b_gens` (each must lie in Z).
inline std::vector<i64> subquotient_orders(const ZnMatrix& a, const std::vector<std::vector<i64>>& b_gens) {
  const i64 n = a.modulus();
  SmithDecomposition s = smith(a);
  std::vector<std::size_t> factors;
  for (std::size_t i = 0; i < a.cols(); ++i)
    if (s.diag[i] != 1) factors.push_back(i);

  std::vector<std::vector<i64>> rel;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    i64 d = s.diag[factors[f]];
    if (d == n) continue;
    std::vector<i64> col(factors.size(), 0);
    col[f] = d;
    rel.push_back(std::move(col));
  }
  for (const auto& b : b_gens) {
    std::vector<i64> z = s.v_inv.apply(b);
    std::vector<i64> col(factors.size(), 0);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      i64 d = s.diag[i];
      if (d == 1) {
        if (z[i] != 0) throw InternalConsistencyError("subquotient: generator is not in the kernel");
        continue;
      }
      i64 step = n / d;
      if (z[i] % step != 0) throw InternalConsistencyError("subquotient: generator is not in the kernel");
      std::size_t f = static_cast<std::size_t>(std::lower_bound(factors.begin(), factors.end(), i) - factors.begin());
      col[f] = z[i] / step;
    }
    rel.push_back(std::move(col));
  }
  return cokernel_orders(ZnMatrix::from_columns(rel, factors.size(), n));
}

/// Orders of the cyclic factors of the span of the given columns.
inline std::vector<i64> span_orders(const ZnMatrix& gens) {
  const i64 n = gens.modulus();
  std::vector<i64> out;
  if (gens.cols() == 0) return out;
  SmithDecomposition s = smith(gens);
  for (std::size_t i = 0; i < std::min(gens.rows(), gens.cols()); ++i)
    if (s.diag[i] != n) out.push_back(n / s.diag[i]);
  return out;
}

/// Prime-power decomposition of a list of cyclic orders, sorted ascending.
inline std::vector<i64> elementary_divisors(const std::vector<i64>& orders) {
  std::vector<i64> out;
  for (i64 o : orders)
    for (i64 q : prime_power_factors(o)) out.push_back(q);
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank of A when N is prime.
inline std::size_t field_rank(const ZnMatrix& a) {
  if (!is_prime(a.modulus())) throw ValidationError("rank requires a prime modulus");
  SmithDecomposition s = smith(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (s.diag[i] == 1) ++r;
  return r;
}

}  // namespace twyb
