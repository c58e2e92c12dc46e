#pragma once

// Oriented knot and link diagrams given as PD codes, their faces, Alexander
// numbering and colorings by a twisted biquandle.
//
// A crossing [a, b, c, d] lists semiarc labels counterclockwise starting at
// the incoming under-strand, so a -> c is the under-strand and the over-strand
// joins b and d. The crossing is positive when the over-strand runs d -> b.
//
// Grammar (whitespace-insensitive, `#` comments):
//   diagram   := item*
//   item      := pd | "mirror" | "normal" ("left"|"right")
//              | "outer" ("left"|"right") label | "free-loops" count
//   pd        := "[" [crossing ("," crossing)*] "]" | "PD" "[" [...] "]"
//   crossing  := ["X"] "[" label "," label "," label "," label "]"
//
// `free-loops k` adds k split unknotted components; an empty code defaults to
// one. `outer side label` selects the unbounded face as the face on that side
// of the semiarc; the default is the face right of the smallest label.

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twyb/error.hpp"
#include "twyb/parallel.hpp"
#include "twyb/yb_core.hpp"

namespace twyb {

enum class Side { Left, Right };

struct Crossing {
  /// Semiarc indices (label - 1) at positions 0..3.
  std::array<int, 4> arc{};
  int sign = 1;
};

/// One end of a semiarc: a crossing and a position 0..3 in it.
struct ArcEnd {
  int crossing = -1;
  int position = -1;
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct Semiarc {
  ArcEnd tail;
  ArcEnd head;
  int component = 0;
};

class PDDiagram {
 public:
  std::vector<Crossing> crossings;
  std::vector<Semiarc> arcs;
  int free_loops = 0;
  int components = 0;
  Side normals = Side::Left;
  /// Face on `side` of semiarc `label` is unbounded.
  Side outer_side = Side::Right;
  int outer_label = 1;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int arc_count() const noexcept { return static_cast<int>(arcs.size()); }
  /// Semiarcs plus one color slot per free loop.
  int color_slots() const noexcept { return arc_count() + free_loops; }
  int writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
  }
  /// The arc at `end`.
  int arc_at(const ArcEnd& end) const { return crossings[static_cast<std::size_t>(end.crossing)].arc[static_cast<std::size_t>(end.position)]; }
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail::pd {

struct Lexeme {
  enum Kind { Open, Close, Comma, Word, Number, End } kind = End;
  std::string text;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Lexeme next() {
    skip();
    Lexeme lx;
    lx.line = line_;
    lx.column = col_;
    if (i_ >= src_.size()) return lx;
    char c = src_[i_];
    if (c == '[' || c == ']' || c == ',') {
      lx.kind = c == '[' ? Lexeme::Open : c == ']' ? Lexeme::Close : Lexeme::Comma;
      lx.text = std::string(1, c);
      advance();
      return lx;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      lx.kind = Lexeme::Number;
      do {
        lx.text.push_back(src_[i_]);
        advance();
      } while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])));
      return lx;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      lx.kind = Lexeme::Word;
      while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '-')) {
        lx.text.push_back(src_[i_]);
        advance();
      }
      return lx;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

struct RawCrossing {
  std::array<i64, 4> label{};
  std::array<Lexeme, 4> where{};
};

struct RawDiagram {
  std::vector<RawCrossing> crossings;
  bool mirror = false;
  Side normals = Side::Left;
  std::optional<std::pair<Side, i64>> outer;
  std::optional<i64> free_loops;
  Lexeme outer_where;
};

inline i64 number(const Lexeme& lx) {
  if (lx.kind != Lexeme::Number) throw ParseError("expected a number, got '" + lx.text + "'", lx.line, lx.column);
  try {
    return std::stoll(lx.text);
  } catch (const std::exception&) {
    throw ParseError("number out of range '" + lx.text + "'", lx.line, lx.column);
  }
}

inline void expect(const Lexeme& lx, Lexeme::Kind kind, const char* what) {
  if (lx.kind != kind)
    throw ParseError(std::string("expected ") + what + (lx.kind == Lexeme::End ? ", got end of input" : ", got '" + lx.text + "'"),
                     lx.line, lx.column);
}

inline Side side_word(const Lexeme& lx) {
  if (lx.kind == Lexeme::Word && lx.text == "left") return Side::Left;
  if (lx.kind == Lexeme::Word && lx.text == "right") return Side::Right;
  throw ParseError("expected 'left' or 'right'", lx.line, lx.column);
}

inline RawDiagram parse_raw(std::string_view src) {
  Lexer lex(src);
  RawDiagram raw;
  bool have_code = false;
  Lexeme lx = lex.next();
  auto parse_code = [&](Lexeme open) {
    if (have_code) throw ParseError("more than one PD code", open.line, open.column);
    have_code = true;
    expect(open, Lexeme::Open, "'['");
    Lexeme t = lex.next();
    if (t.kind == Lexeme::Close) return;
    while (true) {
      if (t.kind == Lexeme::Word && t.text == "X") t = lex.next();
      expect(t, Lexeme::Open, "'[' opening a crossing");
      RawCrossing rc;
      for (int k = 0; k < 4; ++k) {
        Lexeme v = lex.next();
        rc.label[static_cast<std::size_t>(k)] = number(v);
        rc.where[static_cast<std::size_t>(k)] = v;
        Lexeme sep = lex.next();
        expect(sep, k < 3 ? Lexeme::Comma : Lexeme::Close, k < 3 ? "','" : "']' closing a crossing (crossings have 4 labels)");
      }
      raw.crossings.push_back(rc);
      t = lex.next();
      if (t.kind == Lexeme::Close) return;
      expect(t, Lexeme::Comma, "',' or ']'");
      t = lex.next();
    }
  };
  while (lx.kind != Lexeme::End) {
    if (lx.kind == Lexeme::Open) {
      parse_code(lx);
    } else if (lx.kind == Lexeme::Word && lx.text == "PD") {
      parse_code(lex.next());
    } else if (lx.kind == Lexeme::Word && lx.text == "mirror") {
      raw.mirror = true;
    } else if (lx.kind == Lexeme::Word && lx.text == "normal") {
      raw.normals = side_word(lex.next());
    } else if (lx.kind == Lexeme::Word && lx.text == "outer") {
      raw.outer_where = lx;
      Side s = side_word(lex.next());
      raw.outer = std::make_pair(s, number(lex.next()));
    } else if (lx.kind == Lexeme::Word && lx.text == "free-loops") {
      Lexeme v = lex.next();
      i64 k = number(v);
      if (k < 0 || k > 64) throw ParseError("free-loops count out of range", v.line, v.column);
      raw.free_loops = k;
    } else {
      throw ParseError("unexpected '" + lx.text + "'", lx.line, lx.column);
    }
    lx = lex.next();
  }
  if (!have_code) throw ParseError("no PD code found", lx.line, lx.column);
  return raw;
}

}  // namespace detail::pd

/// Parses and validates a PD code, deriving orientation and signs.
inline PDDiagram parse_pd(std::string_view src) {
  using namespace detail::pd;
  RawDiagram raw = parse_raw(src);
  PDDiagram d;
  d.normals = raw.normals;
  const std::size_t n = raw.crossings.size();
  const i64 labels = static_cast<i64>(2 * n);
  d.free_loops = static_cast<int>(raw.free_loops.value_or(n == 0 ? 1 : 0));
  if (n == 0 && d.free_loops == 0) throw ParseError("empty diagram", 1, 1);

  // Occurrences of each label.
  std::vector<std::vector<ArcEnd>> ends(static_cast<std::size_t>(labels));
  for (std::size_t c = 0; c < n; ++c) {
    auto& rc = raw.crossings[c];
    if (raw.mirror) {
      std::swap(rc.label[1], rc.label[3]);
      std::swap(rc.where[1], rc.where[3]);
    }
    Crossing x;
    for (int p = 0; p < 4; ++p) {
      i64 l = rc.label[static_cast<std::size_t>(p)];
      const Lexeme& w = rc.where[static_cast<std::size_t>(p)];
      if (l < 1 || l > labels)
        throw ParseError("semiarc label " + std::to_string(l) + " outside 1.." + std::to_string(labels), w.line, w.column);
      auto& e = ends[static_cast<std::size_t>(l - 1)];
      if (e.size() == 2) throw ParseError("semiarc " + std::to_string(l) + " has more than two ends", w.line, w.column);
      e.push_back({static_cast<int>(c), p});
      x.arc[static_cast<std::size_t>(p)] = static_cast<int>(l - 1);
    }
    d.crossings.push_back(x);
  }
  for (i64 l = 0; l < labels; ++l)
    if (ends[static_cast<std::size_t>(l)].size() != 2)
      throw ParseError("semiarc " + std::to_string(l + 1) + " has only one end", 1, 1);
  auto where = [&](const ArcEnd& e) -> const Lexeme& {
    return raw.crossings[static_cast<std::size_t>(e.crossing)].where[static_cast<std::size_t>(e.position)];
  };

  // Follow strands: an arc entering at position p leaves through p + 2.
  d.arcs.assign(static_cast<std::size_t>(labels), Semiarc{});
  std::vector<int> comp(static_cast<std::size_t>(labels), -1);
  for (int start = 0; start < labels; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = d.components++;
    std::vector<std::pair<int, ArcEnd>> walk;  // (arc, end it arrives at)
    int arc = start;
    ArcEnd from = ends[static_cast<std::size_t>(arc)][0];
    while (true) {
      comp[static_cast<std::size_t>(arc)] = id;
      const auto& e = ends[static_cast<std::size_t>(arc)];
      ArcEnd to = (e[0] == from) ? e[1] : e[0];
      walk.emplace_back(arc, to);
      ArcEnd out{to.crossing, (to.position + 2) % 4};
      int next = d.arc_at(out);
      if (next == start && out == ends[static_cast<std::size_t>(start)][0]) break;
      arc = next;
      from = out;
    }
    // Orientation: under-strands enter at 0 and leave at 2.
    int votes_keep = 0, votes_flip = 0;
    for (auto& [a, to] : walk) {
      if (to.position == 0) ++votes_keep;
      if (to.position == 2) ++votes_flip;
    }
    bool flip;
    if (votes_keep || votes_flip) {
      if (votes_keep && votes_flip) {
        for (auto& [a, to] : walk)
          if (to.position == 2) throw ParseError("orientation of semiarc " + std::to_string(a + 1) + " is inconsistent with the under-strand at this crossing", where(to).line, where(to).column);
      }
      flip = votes_flip > 0;
    } else {
      // Over-only component: labels increase along the orientation.
      auto mn = std::min_element(walk.begin(), walk.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t i = static_cast<std::size_t>(mn - walk.begin());
      int next = walk[(i + 1) % walk.size()].first;
      int prev = walk[(i + walk.size() - 1) % walk.size()].first;
      flip = walk.size() > 1 && (prev == mn->first + 1 || (next != mn->first + 1 && prev < next));
    }
    for (auto& [a, to] : walk) {
      const auto& e = ends[static_cast<std::size_t>(a)];
      ArcEnd other = (e[0] == to) ? e[1] : e[0];
      if (e[0] == e[1]) other = to;
      Semiarc& s = d.arcs[static_cast<std::size_t>(a)];
      s.component = id;
      s.head = flip ? other : to;
      s.tail = flip ? to : other;
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    Crossing& x = d.crossings[c];
    const Semiarc& at_d = d.arcs[static_cast<std::size_t>(x.arc[3])];
    bool over_enters_d = at_d.head == ArcEnd{static_cast<int>(c), 3};
    x.sign = over_enters_d ? 1 : -1;
  }

  // The graph of crossings must be connected.
  if (n > 0) {
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int a : d.crossings[static_cast<std::size_t>(c)].arc)
        for (const ArcEnd& e : ends[static_cast<std::size_t>(a)])
          if (!seen[static_cast<std::size_t>(e.crossing)]) {
            seen[static_cast<std::size_t>(e.crossing)] = 1;
            stack.push_back(e.crossing);
          }
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!seen[c]) {
        const Lexeme& w = raw.crossings[c].where[0];
        throw ParseError("split diagram: this crossing is not connected to the first one (use free-loops for unknotted split components)", w.line, w.column);
      }
  }

  if (raw.outer) {
    auto [side, label] = *raw.outer;
    if (label < 1 || label > labels)
      throw ParseError("outer label out of range", raw.outer_where.line, raw.outer_where.column);
    d.outer_side = side;
    d.outer_label = static_cast<int>(label);
  }
  if (raw.mirror) d.outer_side = d.outer_side == Side::Left ? Side::Right : Side::Left;
  d.components += d.free_loops;
  return d;
}

/// PD text with directives that reproduce the diagram.
inline std::string write_pd(const PDDiagram& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    os << (c ? "," : "") << '[';
    for (int p = 0; p < 4; ++p) os << (p ? "," : "") << d.crossings[c].arc[static_cast<std::size_t>(p)] + 1;
    os << ']';
  }
  os << "]\n";
  if (d.normals == Side::Right) os << "normal right\n";
  if (d.crossing_count() > 0) os << "outer " << (d.outer_side == Side::Left ? "left " : "right ") << d.outer_label << '\n';
  if (d.free_loops != (d.crossings.empty() ? 1 : 0)) os << "free-loops " << d.free_loops << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Faces and Alexander numbering

struct Dart {
  int arc = 0;
  bool forward = true;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct RegionMap {
  /// Boundary darts of each face, each with the face on its left. Faces of
  /// free loops have empty boundaries.
  std::vector<std::vector<Dart>> faces;
  std::vector<int> left_face, right_face;  // per semiarc
  int outer = 0;
  std::vector<int> numbering;              // per face
  std::vector<std::array<int, 4>> corner;  // corner[c][p]: face between positions p and p + 1
  std::vector<int> source_corner;          // position p of the source corner
  std::vector<int> source_region;          // per crossing
  std::vector<int> crossing_numbering;     // per crossing
};

namespace detail {

inline ArcEnd dart_arrival(const PDDiagram& d, const Dart& t) {
  const Semiarc& s = d.arcs[static_cast<std::size_t>(t.arc)];
  return t.forward ? s.head : s.tail;
}

/// Under-normal and over-normal positions; see boltzmann_inputs.
inline int under_normal_position(const PDDiagram& d) { return d.normals == Side::Left ? 3 : 1; }
inline int over_normal_position(const PDDiagram& d, int sign) {
  int p = sign > 0 ? 2 : 0;
  return d.normals == Side::Left ? p : (p + 2) % 4;
}

}  // namespace detail

/// Traces faces, checks Euler's formula and numbers the regions by a
/// breadth-first search from the unbounded face. `shuffle_seed` permutes
/// the search order; the result must not depend on it.
inline RegionMap alexander_numbering(const PDDiagram& d, std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  RegionMap rm;
  const int n = d.crossing_count();
  const int arcs = d.arc_count();
  rm.left_face.assign(static_cast<std::size_t>(arcs), -1);
  rm.right_face.assign(static_cast<std::size_t>(arcs), -1);
  const int step = d.normals == Side::Left ? 1 : -1;

  if (n > 0) {
    auto face_of = [&](const Dart& t) -> int& {
      return t.forward ? rm.left_face[static_cast<std::size_t>(t.arc)] : rm.right_face[static_cast<std::size_t>(t.arc)];
    };
    for (int a = 0; a < arcs; ++a)
      for (bool fwd : {true, false}) {
        Dart start{a, fwd};
        if (face_of(start) >= 0) continue;
        int id = static_cast<int>(rm.faces.size());
        rm.faces.emplace_back();
        Dart t = start;
        do {
          face_of(t) = id;
          rm.faces.back().push_back(t);
          ArcEnd at = detail::dart_arrival(d, t);
          ArcEnd leave{at.crossing, (at.position + 3) % 4};
          int next = d.arc_at(leave);
          const Semiarc& s = d.arcs[static_cast<std::size_t>(next)];
          t = Dart{next, s.tail == leave};
        } while (!(t == start));
      }
    if (static_cast<int>(rm.faces.size()) != n + 2)
      throw ValidationError("diagram is not planar: " + std::to_string(rm.faces.size()) + " faces for " +
                            std::to_string(n) + " crossings");
    const std::size_t label = static_cast<std::size_t>(d.outer_label - 1);
    rm.outer = d.outer_side == Side::Left ? rm.left_face[label] : rm.right_face[label];

    // Dual graph: crossing arc a from its right face to its left face adds `step`.
    const int faces = static_cast<int>(rm.faces.size());
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(faces));
    for (int a = 0; a < arcs; ++a) {
      int l = rm.left_face[static_cast<std::size_t>(a)], r = rm.right_face[static_cast<std::size_t>(a)];
      adj[static_cast<std::size_t>(r)].emplace_back(l, step);
      adj[static_cast<std::size_t>(l)].emplace_back(r, -step);
    }
    if (shuffle_seed) {
      std::mt19937_64 rng(*shuffle_seed);
      for (auto& v : adj) std::shuffle(v.begin(), v.end(), rng);
    }
    const int unset = std::numeric_limits<int>::min();
    rm.numbering.assign(static_cast<std::size_t>(faces), unset);
    rm.numbering[static_cast<std::size_t>(rm.outer)] = 0;
    std::queue<int> q;
    q.push(rm.outer);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (auto [g, delta] : adj[static_cast<std::size_t>(f)]) {
        int want = rm.numbering[static_cast<std::size_t>(f)] + delta;
        int& have = rm.numbering[static_cast<std::size_t>(g)];
        if (have == unset) {
          have = want;
          q.push(g);
        } else if (have != want) {
          throw InternalConsistencyError("Alexander numbering is inconsistent around face " + std::to_string(g));
        }
      }
    }

    for (int c = 0; c < n; ++c) {
      std::array<int, 4> corner{};
      for (int p = 0; p < 4; ++p) {
        // the dart arriving at position p + 1 has this corner on its left
        ArcEnd at{c, (p + 1) % 4};
        int a = d.arc_at(at);
        const Semiarc& s = d.arcs[static_cast<std::size_t>(a)];
        corner[static_cast<std::size_t>(p)] = s.head == at ? rm.left_face[static_cast<std::size_t>(a)] : rm.right_face[static_cast<std::size_t>(a)];
      }
      rm.corner.push_back(corner);
      int sign = d.crossings[static_cast<std::size_t>(c)].sign;
      int u = (detail::over_normal_position(d, sign) + 2) % 4;        // the under-arc the over normal points away from
      int away = (detail::under_normal_position(d) + 2) % 4;          // side the under normal points away from
      int p = ((u + 1) % 4 == away) ? u : away;                       // corner between u and away
      rm.source_corner.push_back(p);
      int region = corner[static_cast<std::size_t>(p)];
      rm.source_region.push_back(region);
      rm.crossing_numbering.push_back(rm.numbering[static_cast<std::size_t>(region)]);
    }
  } else {
    rm.faces.emplace_back();
    rm.numbering.push_back(0);
  }
  // Free loops sit in the unbounded face, oriented counterclockwise.
  for (int k = 0; k < d.free_loops; ++k) {
    rm.faces.emplace_back();
    rm.numbering.push_back(step);
  }
  return rm;
}

// ---------------------------------------------------------------------------
// Colorings

/// Colors of the semiarcs (index = label - 1) followed by one per free loop.
using Coloring = std::vector<int>;

/// Positions (p, q, r, s) with (C(r), C(s)) = R(C(p), C(q)) at a crossing.
inline std::array<int, 4> crossing_relation(int sign) {
  return sign > 0 ? std::array<int, 4>{0, 3, 1, 2} : std::array<int, 4>{2, 3, 1, 0};
}

inline bool is_coloring(const PDDiagram& d, const YBOperator& r, const Coloring& c) {
  if (static_cast<int>(c.size()) != d.color_slots()) return false;
  for (int v : c)
    if (v < 0 || v >= r.size()) return false;
  for (const auto& x : d.crossings) {
    auto rel = crossing_relation(x.sign);
    auto col = [&](int p) { return c[static_cast<std::size_t>(x.arc[static_cast<std::size_t>(rel[static_cast<std::size_t>(p)])])]; };
    if (r(col(0), col(1)) != Pair{col(2), col(3)}) return false;
  }
  return true;
}

namespace detail {

class ColoringSearch {
 public:
  ColoringSearch(const PDDiagram& d, const YBOperator& r) : d_(d), r_(r), n_(r.size()) {
    solve1_.assign(static_cast<std::size_t>(n_ * n_), -1);
    solve2_.assign(static_cast<std::size_t>(n_ * n_), -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        solve1_[static_cast<std::size_t>(x * n_ + r.r1(x, y))] = y;  // R1(x, y) = z  ->  y
        solve2_[static_cast<std::size_t>(y * n_ + r.r2(x, y))] = x;  // R2(x, y) = w  ->  x
      }
    touching_.assign(static_cast<std::size_t>(d.arc_count()), {});
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int a : d.crossings[static_cast<std::size_t>(c)].arc) touching_[static_cast<std::size_t>(a)].push_back(c);
  }

  /// Calls emit for every coloring of the semiarcs with semiarc 0 fixed to
  /// `root` (or all of them when the diagram has no crossings).
  void run(int root, const std::function<void(const Coloring&)>& emit) const {
    Coloring c(static_cast<std::size_t>(d_.arc_count()), -1);
    if (d_.arc_count() == 0) {
      emit(c);
      return;
    }
    std::vector<int> trail;
    if (assign(c, 0, root, trail)) search(c, emit);
  }

 private:
  bool assign(Coloring& c, int arc, int v, std::vector<int>& trail) const {
    int& slot = c[static_cast<std::size_t>(arc)];
    if (slot >= 0) return slot == v;
    slot = v;
    trail.push_back(arc);
    for (int x : touching_[static_cast<std::size_t>(arc)])
      if (!propagate(c, x, trail)) return false;
    return true;
  }

  bool propagate(Coloring& c, int x, std::vector<int>& trail) const {
    const Crossing& cr = d_.crossings[static_cast<std::size_t>(x)];
    auto rel = crossing_relation(cr.sign);
    int a[4];
    for (int k = 0; k < 4; ++k) a[k] = cr.arc[static_cast<std::size_t>(rel[static_cast<std::size_t>(k)])];
    auto col = [&](int k) { return c[static_cast<std::size_t>(a[k])]; };
    int p = col(0), q = col(1), r = col(2), s = col(3);
    if (p >= 0 && q >= 0) {
      auto [o1, o2] = r_(p, q);
      return assign(c, a[2], o1, trail) && assign(c, a[3], o2, trail);
    }
    if (r >= 0 && s >= 0) {
      auto [i1, i2] = r_.inverse(r, s);
      return assign(c, a[0], i1, trail) && assign(c, a[1], i2, trail);
    }
    if (p >= 0 && r >= 0) {
      int y = solve1_[static_cast<std::size_t>(p * n_ + r)];
      return y >= 0 && assign(c, a[1], y, trail);
    }
    if (q >= 0 && s >= 0) {
      int xx = solve2_[static_cast<std::size_t>(q * n_ + s)];
      return xx >= 0 && assign(c, a[0], xx, trail);
    }
    return true;
  }

  void search(Coloring& c, const std::function<void(const Coloring&)>& emit) const {
    auto it = std::find(c.begin(), c.end(), -1);
    if (it == c.end()) {
      emit(c);
      return;
    }
    int arc = static_cast<int>(it - c.begin());
    for (int v = 0; v < n_; ++v) {
      Coloring next = c;
      std::vector<int> trail;
      if (assign(next, arc, v, trail)) search(next, emit);
    }
  }

  const PDDiagram& d_;
  const YBOperator& r_;
  int n_;
  std::vector<int> solve1_, solve2_;
  std::vector<std::vector<int>> touching_;
};

}  // namespace detail

/// Visits every coloring in lexicographic order of the semiarc colors, free
/// loop colors varying fastest. Requires a birack; the work is split over
/// the color of the first semiarc.
inline void for_each_coloring(const PDDiagram& d, const YBOperator& r, const std::function<void(const Coloring&)>& body,
                              unsigned jobs = 1) {
  if (!r.invertible()) throw ValidationError("coloring requires an invertible R");
  AxiomReport rep = analyze(r);
  if (!rep.birack()) throw ValidationError("coloring requires a birack");
  detail::ColoringSearch search(d, r);
  const int roots = d.arc_count() == 0 ? 1 : r.size();
  std::vector<std::vector<Coloring>> found(static_cast<std::size_t>(roots));
  parallel_chunks(static_cast<std::size_t>(roots), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v)
      search.run(static_cast<int>(v), [&](const Coloring& c) { found[v].push_back(c); });
  });
  std::vector<int> loops(static_cast<std::size_t>(d.free_loops), 0);
  for (const auto& group : found)
    for (const auto& base : group) {
      std::fill(loops.begin(), loops.end(), 0);
      while (true) {
        Coloring full = base;
        full.insert(full.end(), loops.begin(), loops.end());
        if (!is_coloring(d, r, full)) throw InternalConsistencyError("enumerated assignment violates a crossing relation");
        body(full);
        std::size_t k = loops.size();
        while (k > 0 && ++loops[k - 1] == r.size()) loops[--k] = 0;
        if (k == 0) break;
      }
    }
}

inline std::vector<Coloring> enumerate_colorings(const PDDiagram& d, const TwistedYBSet& tw, unsigned jobs = 1) {
  if (!analyze(tw.op()).biquandle()) throw ValidationError("coloring requires a twisted biquandle");
  std::vector<Coloring> out;
  for_each_coloring(d, tw.op(), [&](const Coloring& c) { out.push_back(c); }, jobs);
  return out;
}

/// (C(u), C(o)): u is the under-arc the over-arc's normal points away from,
/// o the over-arc the under-arc's normal points towards.
inline Pair boltzmann_inputs(const PDDiagram& d, const Coloring& c, int crossing) {
  const Crossing& x = d.crossings[static_cast<std::size_t>(crossing)];
  int u = (detail::over_normal_position(d, x.sign) + 2) % 4;
  int o = detail::under_normal_position(d);
  return {c[static_cast<std::size_t>(x.arc[static_cast<std::size_t>(u)])], c[static_cast<std::size_t>(x.arc[static_cast<std::size_t>(o)])]};
}

}  // namespace twyb
