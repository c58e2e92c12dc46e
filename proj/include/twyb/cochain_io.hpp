#pragma once

// Cochain text format. A file holds one or more blocks:
//
//   cochain <degree> <N> <u>
//   <x1> .. <xn> <value>          one record per tuple; missing tuples are 0
//
// Tuple entries are carrier indices; values are reduced mod N.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twyb/cochain.hpp"
#include "twyb/text.hpp"

namespace twyb {

struct CochainBlock {
  Cochain cochain;
  CoefficientModule module;
};

inline std::vector<CochainBlock> parse_cochains(std::string_view src, int size) {
  text::Cursor cur(text::tokenize(src));
  std::vector<CochainBlock> out;
  if (cur.done()) throw ParseError("no cochain block", 1, 1);
  while (!cur.done()) {
    cur.expect("cochain");
    const text::Token& deg_tok = cur.peek();
    i64 degree = cur.next_integer();
    if (degree < 1 || degree > 8) throw ParseError("degree out of range", deg_tok.line, deg_tok.column);
    const text::Token& mod_tok = cur.peek();
    i64 n = cur.next_integer();
    const text::Token& unit_tok = cur.peek();
    i64 u = cur.next_integer();
    CoefficientModule m;
    try {
      m = CoefficientModule(n, u);
    } catch (const ValidationError& e) {
      const text::Token& at = n <= 0 ? mod_tok : unit_tok;
      throw ParseError(e.what(), at.line, at.column);
    }
    Cochain c(static_cast<int>(degree), size, n);
    std::vector<bool> seen(c.values.size(), false);
    while (!cur.done() && cur.peek().text != "cochain") {
      const text::Token& first = cur.peek();
      Tuple x;
      for (i64 k = 0; k < degree; ++k) {
        const text::Token& t = cur.next();
        i64 v = text::to_integer(t);
        if (v < 0 || v >= size)
          throw ParseError("tuple entry " + t.text + " outside 0.." + std::to_string(size - 1), t.line, t.column);
        x.push_back(static_cast<int>(v));
      }
      i64 value = cur.next_integer();
      std::uint64_t r = tuple_rank(x, size);
      if (seen[r]) throw ParseError("duplicate tuple " + format_tuple(x), first.line, first.column);
      seen[r] = true;
      c.values[r] = mod(value, n);
    }
    out.push_back({std::move(c), m});
  }
  return out;
}

/// Nonzero values only, in lexicographic tuple order.
inline std::string write_cochain(const Cochain& c, const CoefficientModule& m) {
  std::ostringstream os;
  os << "cochain " << c.degree << ' ' << m.modulus << ' ' << m.unit << '\n';
  for (std::uint64_t r = 0; r < c.values.size(); ++r) {
    if (c.values[r] == 0) continue;
    for (int v : tuple_unrank(r, c.degree, c.size)) os << v << ' ';
    os << c.values[r] << '\n';
  }
  return os.str();
}

}  // namespace twyb
