#pragma once

// Structure text format:
//
//   yb <size>
//   r1 <R1(0,0) .. R1(0,size-1)>      one r1 row per x, size rows
//   r2 <R2(0,0) .. R2(0,size-1)>      one r2 row per x, size rows
//   twist <f(0) .. f(size-1)>         optional
//   labels <name_0 .. name_size-1>    optional, display only
//
// Tokens may be split across lines arbitrarily; `#` starts a comment.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twyb/text.hpp"
#include "twyb/yb_core.hpp"

namespace twyb {

struct StructureFile {
  YBOperator op;
  std::optional<Twist> twist;
  std::vector<std::string> labels;
};

inline StructureFile parse_structure(std::string_view src) {
  text::Cursor cur(text::tokenize(src));
  cur.expect("yb");
  const text::Token& size_tok = cur.peek();
  i64 size = cur.next_integer();
  if (size <= 0 || size > 4096) throw ParseError("carrier size out of range", size_tok.line, size_tok.column);
  const int n = static_cast<int>(size);

  auto read_entries = [&](std::vector<int>& dst) {
    for (int k = 0; k < n; ++k) {
      const text::Token& t = cur.next();
      i64 v = text::to_integer(t);
      if (v < 0 || v >= n)
        throw ParseError("entry " + t.text + " outside 0.." + std::to_string(n - 1), t.line, t.column);
      dst.push_back(static_cast<int>(v));
    }
  };

  std::vector<int> r1, r2;
  for (int x = 0; x < n; ++x) {
    cur.expect("r1");
    read_entries(r1);
  }
  for (int x = 0; x < n; ++x) {
    cur.expect("r2");
    read_entries(r2);
  }
  StructureFile out{YBOperator(n, std::move(r1), std::move(r2)), std::nullopt, {}};
  while (!cur.done()) {
    const text::Token& kw = cur.next();
    if (kw.text == "twist") {
      if (out.twist) throw ParseError("duplicate twist line", kw.line, kw.column);
      std::vector<int> perm;
      read_entries(perm);
      try {
        out.twist = Twist(std::move(perm));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), kw.line, kw.column);
      }
    } else if (kw.text == "labels") {
      for (int k = 0; k < n; ++k) out.labels.push_back(cur.next().text);
    } else {
      throw ParseError("unknown keyword '" + kw.text + "'", kw.line, kw.column);
    }
  }
  return out;
}

inline std::string write_structure(const YBOperator& op, const std::optional<Twist>& twist = std::nullopt,
                                   const std::vector<std::string>& labels = {}) {
  std::ostringstream os;
  const int n = op.size();
  os << "yb " << n << '\n';
  auto row = [&](const char* kw, auto&& get) {
    for (int x = 0; x < n; ++x) {
      os << kw;
      for (int y = 0; y < n; ++y) os << ' ' << get(x, y);
      os << '\n';
    }
  };
  row("r1", [&](int x, int y) { return op.r1(x, y); });
  row("r2", [&](int x, int y) { return op.r2(x, y); });
  if (twist) {
    os << "twist";
    for (int v : twist->perm()) os << ' ' << v;
    os << '\n';
  }
  if (!labels.empty()) {
    os << "labels";
    for (const auto& l : labels) os << ' ' << l;
    os << '\n';
  }
  return os.str();
}

}  // namespace twyb
