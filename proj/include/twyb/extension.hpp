#pragma once

// Abelian extensions V = M x X of a twisted Yang-Baxter set:
//
//   S((a,x),(b,y)) = ((b + T^m1 phi1(x,y), R1(x,y)), (a + T^m2 phi2(x,y), R2(x,y)))
//
// The element (a, x) of V has rank a * |X| + x.

#include <array>
#include <optional>
#include <string>

#include "twyb/cochain.hpp"

namespace twyb {

struct ExtensionData {
  TwistedYBSet base;
  CoefficientModule module;
  Cochain phi1;
  Cochain phi2;
  i64 m1 = 0;
  i64 m2 = 0;
};

inline int extension_rank(const ExtensionData& e, i64 a, int x) {
  return static_cast<int>(mod(a, e.module.modulus)) * e.base.size() + x;
}

namespace detail {

inline void validate_extension(const ExtensionData& e, int max_size) {
  const int n = e.base.size();
  for (const Cochain* c : {&e.phi1, &e.phi2}) {
    if (c->degree != 2 || c->size != n || c->modulus != e.module.modulus)
      throw StructuralError("extension maps must be X x X -> Z/N for the given structure and module");
    if (auto w = equivariance_violation(*c, e.base.twist(), e.module))
      throw ValidationError("extension map is not T-equivariant at " + format_tuple(*w));
  }
  if (e.module.modulus * n > max_size)
    throw SizeGuardError("extension carrier |M| |X| = " + std::to_string(e.module.modulus * n) +
                         " exceeds the size guard");
}

}  // namespace detail

struct ExtensionResult {
  YBOperator op;
  bool yang_baxter = false;
};

inline ExtensionResult build_extension(const ExtensionData& e, int max_size = 4096, unsigned jobs = 1) {
  detail::validate_extension(e, max_size);
  const int n = e.base.size();
  const i64 N = e.module.modulus;
  const YBOperator& r = e.base.op();
  const i64 t1 = e.module.power(e.m1), t2 = e.module.power(e.m2);
  YBOperator s = YBOperator::from_function(static_cast<int>(N) * n, [&](int p, int q) {
    i64 a = p / n, b = q / n;
    int x = p % n, y = q % n;
    i64 first = b + mul_mod(t1, e.phi1({x, y}), N);
    i64 second = a + mul_mod(t2, e.phi2({x, y}), N);
    return Pair{extension_rank(e, first, r.r1(x, y)), extension_rank(e, second, r.r2(x, y))};
  });
  bool yb = verify_ybe(s, jobs);
  return {std::move(s), yb};
}

/// The three identities obtained by comparing the c-, b- and a-components of
/// both sides of the braid relation for S, for one triple (x, y, z).
struct ComponentIdentities {
  std::array<i64, 3> lhs{};
  std::array<i64, 3> rhs{};
  bool holds() const { return lhs == rhs; }
};

inline ComponentIdentities component_identities(const ExtensionData& e, int x, int y, int z) {
  const YBOperator& r = e.base.op();
  const i64 N = e.module.modulus;
  auto p1 = [&](int a, int b) { return mul_mod(e.module.power(e.m1), e.phi1({a, b}), N); };
  auto p2 = [&](int a, int b) { return mul_mod(e.module.power(e.m2), e.phi2({a, b}), N); };
  int r1xy = r.r1(x, y), r2xy = r.r2(x, y), r1yz = r.r1(y, z), r2yz = r.r2(y, z);
  int inner = r.r1(r2xy, z);
  int x_r1yz = r.r2(x, r1yz);
  ComponentIdentities c;
  c.lhs[0] = mod(p1(r2xy, z) + p1(r1xy, inner), N);
  c.rhs[0] = mod(p1(y, z) + p1(x, r1yz), N);
  c.lhs[1] = mod(p1(x, y) + p2(r1xy, inner), N);
  c.rhs[1] = mod(p2(y, z) + p1(x_r1yz, r2yz), N);
  c.lhs[2] = mod(p2(x, y) + p2(r2xy, z), N);
  c.rhs[2] = mod(p2(x, r1yz) + p2(x_r1yz, r2yz), N);
  return c;
}

/// First triple where one of the component identities fails.
inline std::optional<Triple> component_identity_violation(const ExtensionData& e) {
  const int n = e.base.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!component_identities(e, x, y, z).holds()) return Triple{x, y, z};
  return std::nullopt;
}

struct ExtensionCocycle {
  /// T^m1 phi1 + T^m2 phi2.
  Cochain phi;
  bool yang_baxter = false;
  CocycleCheck check;
};

/// Builds S and tests phi = T^m1 phi1 + T^m2 phi2 in Z^2_{TYB,(0,0)}. A Yang-Baxter S
/// with a failing check is a library bug and throws.
inline ExtensionCocycle extension_cocycle(const ExtensionData& e, unsigned jobs = 1) {
  ExtensionResult s = build_extension(e, 4096, jobs);
  const i64 N = e.module.modulus;
  Cochain phi(2, e.base.size(), N);
  for (std::size_t i = 0; i < phi.values.size(); ++i)
    phi.values[i] = mod(mul_mod(e.module.power(e.m1), e.phi1.values[i], N) +
                            mul_mod(e.module.power(e.m2), e.phi2.values[i], N),
                        N);
  TwistedComplex cx(e.base, {0, 0, 0, Variant::TYB, TwistMode::Coordinate});
  ExtensionCocycle out{phi, s.yang_baxter, cocycle_check(cx, phi, e.module)};
  if (out.yang_baxter && !out.check)
    throw InternalConsistencyError("extension satisfies the braid relation but phi is not a 2-cocycle");
  return out;
}

struct SingleMapCocycle {
  /// T^m1 phi + T^m2 phi.
  Cochain psi;
  bool yang_baxter = false;
  /// psi in Z^2_{TYB,(0,0)}: implied by S satisfying the braid relation.
  CocycleCheck untwisted;
  /// psi in Z^2_{TYB,(m1,m2)}: implied as well when m1 = m2, reported otherwise.
  CocycleCheck twisted;
};

inline SingleMapCocycle single_map_cocycle(const TwistedYBSet& base, const CoefficientModule& m, const Cochain& phi,
                                           i64 m1, i64 m2, unsigned jobs = 1) {
  ExtensionData e{base, m, phi, phi, m1, m2};
  ExtensionCocycle c = extension_cocycle(e, jobs);
  TwistedComplex cx(base, {0, m1, m2, Variant::TYB, TwistMode::Coordinate});
  SingleMapCocycle out{c.phi, c.yang_baxter, c.check, cocycle_check(cx, c.phi, m)};
  if (out.yang_baxter && m1 == m2 && !out.twisted)
    throw InternalConsistencyError("single-map extension satisfies the braid relation but psi is not a cocycle");
  return out;
}

}  // namespace twyb
