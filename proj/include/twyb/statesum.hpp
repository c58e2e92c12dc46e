#pragma once

// State-sum invariants valued in Z[M]. A crossing tau colored with inputs
// (x, y) contributes the group element u^(-n L(tau)) * sign(tau) * phi(x, y);
// a coloring contributes the sum of its crossings' elements and Phi adds
// one basis element per coloring.
//
// Triple-point file (surfaces):
//   coloring <id>
//   triple <x> <y> <z> <sign> <L>      zero or more per coloring

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twyb/cochain.hpp"
#include "twyb/diagram.hpp"
#include "twyb/group_ring.hpp"
#include "twyb/text.hpp"

namespace twyb {

struct StateSumSpec {
  Cochain cocycle;
  i64 n = 1;
  CoefficientModule module;

  /// The complex in which the cocycle must be closed.
  TwistParams params() const { return {0, 0, n, Variant::TBQ, TwistMode::Coordinate}; }
};

namespace detail {

inline void validate_state_sum(const TwistedYBSet& tw, const StateSumSpec& s, int degree) {
  if (s.n < 1) throw ValidationError("the weight exponent n must be positive");
  if (s.cocycle.degree != degree)
    throw StructuralError("state sum needs a degree-" + std::to_string(degree) + " cocycle");
  if (s.cocycle.size != tw.size() || s.cocycle.modulus != s.module.modulus)
    throw StructuralError("cocycle does not match the structure or module");
  if (!classify(tw).is_biquandle()) throw ValidationError("state sums require a twisted biquandle");
  CocycleCheck c = cocycle_check(tw, s.params(), s.cocycle, s.module);
  if (!c)
    throw ValidationError("not a cocycle in the TBQ complex with (m1, m2) = (0, " + std::to_string(s.n) + "): " +
                          c.reason + (c.witness.empty() ? "" : " at " + format_tuple(c.witness)));
}

/// u^(-n L) * sign * value in M.
inline i64 weight_element(const StateSumSpec& s, i64 value, int sign, i64 L) {
  return mul_mod(s.module.power(-s.n * L), mod(sign * value, s.module.modulus), s.module.modulus);
}

inline GroupRingElement sum_over_colorings(const PDDiagram& d, const TwistedYBSet& tw, const StateSumSpec& s,
                                           const std::vector<i64>& L, unsigned jobs) {
  const i64 N = s.module.modulus;
  GroupRingElement out(N);
  for_each_coloring(
      d, tw.op(),
      [&](const Coloring& c) {
        i64 g = 0;
        for (int k = 0; k < d.crossing_count(); ++k) {
          auto [x, y] = boltzmann_inputs(d, c, k);
          g += weight_element(s, s.cocycle({x, y}), d.crossings[static_cast<std::size_t>(k)].sign, L[static_cast<std::size_t>(k)]);
        }
        out.add(g, 1);
      },
      jobs);
  return out;
}

}  // namespace detail

/// The single-term element for one crossing.
inline GroupRingElement boltzmann_weight(const StateSumSpec& s, int x, int y, int sign, i64 L) {
  return GroupRingElement::single(s.module.modulus, detail::weight_element(s, s.cocycle({x, y}), sign, L));
}

inline GroupRingElement state_sum(const PDDiagram& d, const TwistedYBSet& tw, const StateSumSpec& s, unsigned jobs = 1) {
  detail::validate_state_sum(tw, s, 2);
  RegionMap rm = alexander_numbering(d);
  std::vector<i64> L(rm.crossing_numbering.begin(), rm.crossing_numbering.end());
  return detail::sum_over_colorings(d, tw, s, L, jobs);
}

/// Crossing numbers of the planar numbering reduced to [0, p).
inline std::vector<i64> mod_p_numbering(const RegionMap& rm, i64 p) {
  std::vector<i64> out;
  for (int k : rm.crossing_numbering) out.push_back(mod(k, p));
  return out;
}

/// Phi with crossing numbers defined mod p, the order of f, reported up to
/// the action of T. An absent numbering gives the zero element.
inline GroupRingElement mod_p_state_sum(const PDDiagram& d, const TwistedYBSet& tw, const StateSumSpec& s,
                                        const std::optional<std::vector<i64>>& numbering, i64 p, unsigned jobs = 1) {
  if (p != tw.twist().order())
    throw ValidationError("p = " + std::to_string(p) + " but f has order " + std::to_string(tw.twist().order()));
  detail::validate_state_sum(tw, s, 2);
  if (!numbering) return GroupRingElement::zero(s.module.modulus);
  if (static_cast<int>(numbering->size()) != d.crossing_count())
    throw StructuralError("mod-p numbering needs one number per crossing");
  std::vector<i64> L;
  for (i64 k : *numbering) L.push_back(mod(k, p));
  return normalize_up_to_T(detail::sum_over_colorings(d, tw, s, L, jobs), s.module);
}

// ---------------------------------------------------------------------------
// Surfaces

struct TriplePoint {
  int x = 0, y = 0, z = 0;
  int sign = 1;
  i64 alexander = 0;
};

struct TriplePointData {
  std::vector<std::string> ids;
  std::vector<std::vector<TriplePoint>> colorings;
};

inline TriplePointData parse_triple_points(std::string_view src, int size) {
  text::Cursor cur(text::tokenize(src));
  TriplePointData out;
  if (cur.done()) throw ParseError("no coloring groups", 1, 1);
  while (!cur.done()) {
    const text::Token& head = cur.next();
    if (head.text == "coloring") {
      out.ids.push_back(cur.next().text);
      out.colorings.emplace_back();
      continue;
    }
    if (head.text != "triple") throw ParseError("expected 'coloring' or 'triple', got '" + head.text + "'", head.line, head.column);
    if (out.colorings.empty()) throw ParseError("triple point before the first coloring header", head.line, head.column);
    TriplePoint t;
    int* colors[3] = {&t.x, &t.y, &t.z};
    for (int* c : colors) {
      const text::Token& tok = cur.next();
      i64 v = text::to_integer(tok);
      if (v < 0 || v >= size)
        throw ParseError("color " + tok.text + " outside 0.." + std::to_string(size - 1), tok.line, tok.column);
      *c = static_cast<int>(v);
    }
    const text::Token& sign_tok = cur.next();
    i64 sign = text::to_integer(sign_tok);
    if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1", sign_tok.line, sign_tok.column);
    t.sign = static_cast<int>(sign);
    t.alexander = cur.next_integer();
    out.colorings.back().push_back(t);
  }
  return out;
}

/// The single-term element for one triple point.
inline GroupRingElement triple_point_weight(const StateSumSpec& s, const TriplePoint& t) {
  return GroupRingElement::single(s.module.modulus,
                                  detail::weight_element(s, s.cocycle({t.x, t.y, t.z}), t.sign, t.alexander));
}

inline GroupRingElement surface_state_sum(const TriplePointData& data, const TwistedYBSet& tw, const StateSumSpec& s) {
  detail::validate_state_sum(tw, s, 3);
  if (data.colorings.empty()) throw ValidationError("no colorings supplied");
  GroupRingElement out(s.module.modulus);
  for (const auto& group : data.colorings) {
    i64 g = 0;
    for (const TriplePoint& t : group) {
      for (int c : {t.x, t.y, t.z})
        if (c < 0 || c >= tw.size()) throw ValidationError("triple-point color outside the carrier");
      g += detail::weight_element(s, s.cocycle({t.x, t.y, t.z}), t.sign, t.alexander);
    }
    out.add(g, 1);
  }
  return out;
}

}  // namespace twyb
