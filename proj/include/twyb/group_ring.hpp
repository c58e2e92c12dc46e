#pragma once

// The integral group ring Z[M] of the additive group M = Z/N.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twyb/cochain.hpp"

namespace twyb {

class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(i64 modulus) : modulus_(modulus) {
    if (modulus <= 0) throw ValidationError("group ring modulus must be positive");
  }

  static GroupRingElement zero(i64 modulus) { return GroupRingElement(modulus); }
  static GroupRingElement single(i64 modulus, i64 element, i64 coeff = 1) {
    GroupRingElement e(modulus);
    e.add(element, coeff);
    return e;
  }
  static GroupRingElement identity(i64 modulus) { return single(modulus, 0); }

  i64 modulus() const noexcept { return modulus_; }
  /// Nonzero coefficients keyed by group element in [0, N).
  const std::map<i64, i64>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  i64 coefficient(i64 element) const {
    auto it = terms_.find(mod(element, modulus_));
    return it == terms_.end() ? 0 : it->second;
  }
  /// Sum of coefficients: the augmentation.
  i64 augmentation() const {
    i64 s = 0;
    for (auto [g, c] : terms_) s += c;
    return s;
  }

  void add(i64 element, i64 coeff) {
    if (coeff == 0) return;
    i64 g = mod(element, modulus_);
    i64& slot = terms_[g];
    slot += coeff;
    if (slot == 0) terms_.erase(g);
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check(o);
    for (auto [g, c] : o.terms_) add(g, c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }

  /// Convolution: [g][h] = [g + h].
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check(b);
    GroupRingElement out(a.modulus_);
    for (auto [g, c] : a.terms_)
      for (auto [h, d] : b.terms_) out.add(g + h, c * d);
    return out;
  }

  /// T^k: every group element m goes to u^k m; coefficients are summed on collisions.
  GroupRingElement act(const CoefficientModule& m, i64 k) const {
    if (m.modulus != modulus_) throw StructuralError("module does not match the group ring");
    GroupRingElement out(modulus_);
    for (auto [g, c] : terms_) out.add(m.act(k, g), c);
    return out;
  }

  /// `c1*[m1] + c2*[m2] + ...` in increasing element order; `0` when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [g, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      first = false;
      os << (c < 0 ? -c : c) << "*[" << g << ']';
    }
    return os.str();
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  void check(const GroupRingElement& o) const {
    if (o.modulus_ != modulus_) throw StructuralError("group ring elements over different modules");
  }

  i64 modulus_ = 1;
  std::map<i64, i64> terms_;
};

/// Least element of the T-orbit, comparing sorted (element, coefficient) lists.
inline GroupRingElement normalize_up_to_T(const GroupRingElement& e, const CoefficientModule& m) {
  GroupRingElement best = e;
  std::vector<std::pair<i64, i64>> best_key(e.terms().begin(), e.terms().end());
  for (i64 k = 1; k < m.t_order; ++k) {
    GroupRingElement cand = e.act(m, k);
    std::vector<std::pair<i64, i64>> key(cand.terms().begin(), cand.terms().end());
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

}  // namespace twyb
