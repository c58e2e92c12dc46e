// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/braids.hpp"
#include "support/oracles.hpp"
#include "support/sampling.hpp"
#include "support/symbolic.hpp"
#include "twyb/twyb.hpp"

using namespace twyb;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

oracle::Map2 as_map(const YBOperator& op) {
  return [&op](int x, int y) { return std::pair{op.r1(x, y), op.r2(x, y)}; };
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TWYB_FIXTURES) + "/" + name);
  if (!in) throw Failure{"missing fixture " + name};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct DiagramFamily {
  std::string name;
  std::vector<PDDiagram> variants;
};

/// Stored fixtures first, then further braid-closure variants of each knot.
std::vector<DiagramFamily> diagram_families() {
  auto pd = [](const std::string& s) { return parse_pd(s); };
  auto braid = [](int strands, std::vector<int> w) { return parse_pd(braids::close(strands, std::move(w)).pd); };
  return {
      {"trefoil",
       {pd(slurp("trefoil.pd")), pd(slurp("trefoil_r1.pd")), pd(slurp("trefoil_r2.pd")), pd(slurp("trefoil_r3.pd")),
        braid(2, {-1, -1, -1}), braid(3, {-1, -1, -1, 2}), braid(3, {-2, -1, -2, -1})}},
      {"figure-eight",
       {pd(slurp("figure8.pd")), pd(slurp("figure8_r1.pd")), pd(slurp("figure8_r2.pd")), braid(3, {1, -2, 1, -2}),
        braid(4, {1, -2, 1, -2, -3}), braid(3, {-2, 1, -2, 1})}},
  };
}

std::vector<TwistedYBSet> structures_with_tetrahedral() {
  std::vector<TwistedYBSet> out;
  YBOperator op = from_quandle(tetrahedral_quandle());
  for (auto& f : automorphisms(op)) out.emplace_back(op, f);
  for (auto& ns : fixture_corpus()) out.push_back(ns.structure);
  return out;
}

std::size_t count_colorings(const PDDiagram& d, const YBOperator& r, unsigned jobs = 1) {
  std::size_t k = 0;
  for_each_coloring(d, r, [&](const Coloring&) { ++k; }, jobs);
  return k;
}

/// Every assignment of colors to semiarcs, checked against the crossing pictures.
std::size_t naive_colorings(const PDDiagram& d, const YBOperator& r) {
  const int n = r.size(), arcs = d.arc_count();
  std::vector<int> c(static_cast<std::size_t>(arcs), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& x : d.crossings) {
      auto C = [&](int p) { return c[static_cast<std::size_t>(x.arc[static_cast<std::size_t>(p)])]; };
      if (x.sign > 0)
        ok = ok && C(1) == r.r1(C(0), C(3)) && C(2) == r.r2(C(0), C(3));
      else
        ok = ok && C(1) == r.r1(C(2), C(3)) && C(0) == r.r2(C(2), C(3));
    }
    count += ok;
    int k = arcs;
    while (k > 0 && ++c[static_cast<std::size_t>(k - 1)] == n) c[static_cast<std::size_t>(--k)] = 0;
    if (k == 0) break;
  }
  for (int l = 0; l < d.free_loops; ++l) count *= static_cast<std::size_t>(n);
  return count;
}

Cochain random_combination(const std::vector<Cochain>& basis, int degree, int size, i64 N, std::mt19937& rng) {
  Cochain c(degree, size, N);
  for (const auto& b : basis) {
    i64 k = static_cast<i64>(rng() % static_cast<unsigned>(N));
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = mod(c.values[i] + k * b.values[i], N);
  }
  return c;
}

// ---------------------------------------------------------------------------

std::string axiom_suite() {
  struct Case {
    std::string name;
    YBOperator op;
    StructureKind expected;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= 6; ++n) cases.push_back({"cyclic" + std::to_string(n), cyclic_biquandle(n), StructureKind::Biquandle});
  for (int n = 3; n <= 6; ++n)
    cases.push_back({"dihedral" + std::to_string(n), dihedral_biquandle(n), StructureKind::Biquandle});
  FiniteGroup s3 = symmetric_group(3);
  cases.push_back({"wada-S3", wada(s3), StructureKind::Biquandle});
  cases.push_back({"wada2-S3", wada_second(s3), StructureKind::Biquandle});
  int alexander = 0;
  for (i64 a = 1; a < 5; ++a)
    for (i64 b = 1; b < 5; ++b)
      if (mod((1 - a) * (1 - b), 5) == 0) {
        cases.push_back({"alexander5", alexander_biquandle(5, a, b), StructureKind::Biquandle});
        ++alexander;
      }
  require(alexander == 7, "expected 7 admissible Alexander pairs on Z5");
  cases.push_back({"(y, x+1) on Z2", YBOperator::from_function(2, [](int x, int y) { return Pair{y, (x + 1) % 2}; }),
                   StructureKind::Birack});
  for (const auto& c : cases) {
    require(verify_ybe(c.op) && oracle::ybe(c.op.size(), as_map(c.op)), c.name + ": YBE");
    require(classify(c.op).kind == c.expected, c.name + ": class " + to_string(classify(c.op).kind));
    bool oracle_biquandle = oracle::birack(c.op.size(), as_map(c.op)) && oracle::type1(c.op.size(), as_map(c.op));
    require(oracle_biquandle == (c.expected == StructureKind::Biquandle), c.name + ": oracle class");
  }
  YBOperator cyc = cyclic_biquandle(5);
  require(cyc(2, 4) == Pair{0, 1}, "cyclic formula (y+1, x-1)");
  return std::to_string(cases.size()) + " operators";
}

std::string twisted_operators() {
  auto corpus = fixture_corpus();
  require(corpus.size() >= 20, "corpus has fewer than 20 structures");
  std::size_t checked = 0;
  for (const auto& s : corpus) {
    require(s.structure.size() <= 4, s.name + " too large");
    StructureKind base = classify(s.structure.op()).kind;
    require(base == StructureKind::Biquandle, s.name + " is not a biquandle");
    for (int t = -2; t <= 2; ++t) {
      YBOperator q = twisted_operator(s.structure, t);
      require(verify_ybe(q) && oracle::ybe(q.size(), as_map(q)), s.name + " t=" + std::to_string(t) + ": YBE");
      require(classify(q).kind == base, s.name + " t=" + std::to_string(t) + ": class changed");
      ++checked;
    }
  }
  return std::to_string(corpus.size()) + " structures, " + std::to_string(checked) + " operators";
}

std::string face_map_anchor() {
  using namespace symbolic;
  constexpr i64 m = 7;
  Sym x1 = leaf("x1"), x2 = leaf("x2"), x3 = leaf("x3");
  auto d1 = faces::boundary_terms(std::vector<Sym>{x1, x2}, symbolic_cross, 0, m);
  require(normalize(d1) == sorted({{-1, 0, "(x2)"}, {1, m, "(R1(x1,x2))"}, {1, 0, "(R2(x1,x2))"}, {-1, m, "(x1)"}}),
          "degree-1 coboundary");
  auto d2 = faces::boundary_terms(std::vector<Sym>{x1, x2, x3}, symbolic_cross, 0, m);
  require(normalize(d2) == sorted({{1, m, "(R1(x1,x2),R1(R2(x1,x2),x3))"},
                                   {1, 0, "(R2(x1,x2),x3)"},
                                   {1, m, "(x1,x2)"},
                                   {-1, 0, "(x2,x3)"},
                                   {-1, m, "(x1,R1(x2,x3))"},
                                   {-1, 0, "(R2(x1,R1(x2,x3)),R2(x2,x3))"}}),
          "degree-2 coboundary");
  // the same identities with f^m applied to coordinates
  auto realize = [](std::vector<GenericTerm<Sym>> terms) {
    for (auto& t : terms)
      if (t.exponent == m) {
        for (auto& v : t.tuple) v = push_twist(v);
        t.exponent = 0;
      }
    return terms;
  };
  require(normalize(realize(d1)) ==
              sorted({{-1, 0, "(x2)"}, {1, 0, "(R1(f^m(x1),f^m(x2)))"}, {1, 0, "(R2(x1,x2))"}, {-1, 0, "(f^m(x1))"}}),
          "degree-1 coordinate form");
  require(normalize(realize(d2)) == sorted({{1, 0, "(R1(f^m(x1),f^m(x2)),R1(R2(f^m(x1),f^m(x2)),f^m(x3)))"},
                                            {1, 0, "(R2(x1,x2),x3)"},
                                            {1, 0, "(f^m(x1),f^m(x2))"},
                                            {-1, 0, "(x2,x3)"},
                                            {-1, 0, "(f^m(x1),R1(f^m(x2),f^m(x3)))"},
                                            {-1, 0, "(R2(x1,R1(x2,x3)),R2(x2,x3))"}}),
          "degree-2 coordinate form");
  // the numeric coboundary is LHS - RHS of the written identity, f^m on coordinates
  TwistedYBSet tw = make_twisted(cyclic_biquandle(3), translation(3, 1));
  const YBOperator& R = tw.op();
  CoefficientModule mod3(3, 1);
  TwistedComplex cx(tw, {0, 0, 1, Variant::TYB, TwistMode::Coordinate});
  std::mt19937 rng(3);
  int nonzero = 0;
  for (int trial = 0; trial < 5; ++trial) {
    Cochain phi = sampling::random_cochain(cx, 2, mod3, rng);
    nonzero += !phi.is_zero();
    Cochain d = apply_coboundary(cx, phi, mod3);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z) {
          auto f = [&](int a) { return tw.twist()(a); };
          i64 lhs = phi({R.r1(f(x), f(y)), R.r1(R.r2(f(x), f(y)), f(z))}) + phi({R.r2(x, y), z}) + phi({f(x), f(y)});
          i64 rhs = phi({y, z}) + phi({f(x), R.r1(f(y), f(z))}) + phi({R.r2(x, R.r1(y, z)), R.r2(y, z)});
          require(d({x, y, z}) == mod(lhs - rhs, 3), "numeric coboundary at " + format_tuple({x, y, z}));
        }
  }
  require(nonzero > 0, "every sampled cochain was zero");
  return "degree 1 and 2, both twist placements";
}

std::string chain_complex_suite() {
  std::size_t complexes = 0;
  for (const auto& s : fixture_corpus())
    for (i64 t : {0, 1})
      for (Variant v : {Variant::TYB, Variant::TBQ})
        for (TwistMode mode : {TwistMode::Coordinate, TwistMode::Scalar})
          for (i64 m1 : {-1, 0, 1})
            for (i64 m2 : {-1, 0, 1}) {
              if (mode == TwistMode::Scalar && m1 != 0) continue;
              TwistedComplex cx(s.structure, {t, m1, m2, v, mode});
              for (int n = 1; n <= 4; ++n) {
                std::string at = s.name + " t=" + std::to_string(t) + " m=(" + std::to_string(m1) + "," +
                                 std::to_string(m2) + ") " + to_string(v) + " " + to_string(mode) + " n=" + std::to_string(n);
                require(!boundary_square_violation(cx, n), at + ": d d != 0");
                require(static_cast<bool>(precubical_check(cx, n)), at + ": precubical identity");
                if (v == Variant::TBQ) require(!degenerate_closure_violation(cx, n), at + ": degenerate closure");
              }
              ++complexes;
            }
  return std::to_string(complexes) + " complexes, n <= 4";
}

std::string exponent_shift() {
  std::size_t checked = 0;
  for (const auto& s : fixture_corpus()) {
    if (s.structure.size() > 3) continue;
    for (CoefficientModule m : {CoefficientModule(5, 2), CoefficientModule(7, 3), CoefficientModule(4, 3)})
      for (Variant v : {Variant::TYB, Variant::TBQ})
        for (i64 k : {-2, -1, 1, 2})
          for (auto [m1, m2] : {std::pair<i64, i64>{0, 0}, {0, 1}, {-1, 1}}) {
            TwistedComplex base(s.structure, {0, m1, m2, v, TwistMode::Coordinate});
            TwistedComplex shifted(s.structure, {0, m1 + k, m2 + k, v, TwistMode::Coordinate});
            for (int d = 1; d <= 2; ++d) {
              std::string at = s.name + " k=" + std::to_string(k) + " d=" + std::to_string(d);
              require(coboundary_matrix(shifted, d, m) == m.power(k) * coboundary_matrix(base, d, m), at + ": matrix");
              CohomologyResult a = cohomology(shifted, d, m), b = cohomology(base, d, m);
              require(a.cocycles == b.cocycles && a.cohomology == b.cohomology, at + ": kernel");
              ++checked;
            }
          }
  }
  return std::to_string(checked) + " matrix pairs";
}

std::string cocycle_oracle() {
  std::size_t checked = 0;
  for (const auto& s : fixture_corpus()) {
    if (s.structure.size() != 2) continue;
    const YBOperator& r = s.structure.op();
    for (int m = -2; m <= 2; ++m) {
      CohomologyResult z = cocycle_space(s.structure, {0, 0, m, Variant::TBQ, TwistMode::Coordinate}, 2, CoefficientModule(2, 1));
      std::uint64_t count = oracle::count_tbq_2cocycles(2, as_map(r), s.structure.twist().perm(), m, 2, 1);
      require((std::uint64_t{1} << z.dim_cocycles()) == count,
              s.name + " m=" + std::to_string(m) + ": dim " + std::to_string(z.dim_cocycles()) + " vs " + std::to_string(count));
      ++checked;
    }
  }
  require(checked > 0, "no two-element structures");
  return std::to_string(checked) + " (structure, m) pairs";
}

std::string extension_scan() {
  std::size_t yb = 0, total = 0;
  for (int shift : {0, 1}) {
    TwistedYBSet tw = make_twisted(cyclic_biquandle(2), translation(2, shift));
    CoefficientModule m(2, 1);
    std::vector<Cochain> maps;
    sampling::for_each_cochain(TwistedComplex(tw, {}), 2, m, [&](const Cochain& c) { maps.push_back(c); });
    for (const auto& p1 : maps)
      for (const auto& p2 : maps)
        for (i64 m1 : {0, 1})
          for (i64 m2 : {0, 1}) {
            ExtensionData e{tw, m, p1, p2, m1, m2};
            ExtensionCocycle c = extension_cocycle(e);
            ++total;
            require(c.yang_baxter == verify_ybe(build_extension(e).op), "S verdicts disagree");
            if (!c.yang_baxter) continue;
            ++yb;
            require(static_cast<bool>(c.check), "S is Yang-Baxter but phi fails: " + c.check.reason);
          }
  }
  require(yb > 1, "scan found no Yang-Baxter extensions");
  return std::to_string(total) + " pairs, " + std::to_string(yb) + " Yang-Baxter, 0 counterexamples";
}

std::string coloring_counts() {
  YBOperator d3 = dihedral_biquandle(3);
  PDDiagram trefoil = parse_pd(slurp("trefoil.pd"));
  require(count_colorings(trefoil, d3) == 9, "trefoil with the dihedral biquandle on Z3");
  require(naive_colorings(trefoil, d3) == 9, "naive trefoil count");
  std::vector<PDDiagram> small;
  for (const auto& fam : diagram_families())
    for (const auto& d : fam.variants)
      if (d.crossing_count() <= 4) small.push_back(d);
  small.push_back(parse_pd(slurp("unknot.pd")));
  for (auto [s, w] : std::vector<std::pair<int, std::vector<int>>>{{2, {1, 1}}, {3, {1, -1, 2, -2}}, {2, {1, 1, 1, 1}}})
    small.push_back(parse_pd(braids::close(s, w).pd));
  std::vector<YBOperator> ops{d3, cyclic_biquandle(3), dihedral_biquandle(4), alexander_biquandle(4, 3, 3)};
  for (const auto& ns : fixture_corpus()) ops.push_back(ns.structure.op());
  std::size_t checked = 0;
  for (const auto& d : small)
    for (const auto& r : ops) {
      std::size_t naive = naive_colorings(d, r);
      require(count_colorings(d, r) == naive && count_colorings(d, r, 3) == naive,
              write_pd(d) + " |X|=" + std::to_string(r.size()));
      ++checked;
    }
  return std::to_string(small.size()) + " diagrams, " + std::to_string(checked) + " pairs";
}

std::string coboundary_state_sums() {
  auto fams = diagram_families();
  std::vector<PDDiagram> diagrams{fams[0].variants[0], fams[1].variants[0]};
  std::size_t checked = 0;
  for (const auto& ns : fixture_corpus())
    for (CoefficientModule m : {CoefficientModule(2, 1), CoefficientModule(3, 1), CoefficientModule(3, 2)})
      for (i64 n : {1, 2}) {
        StateSumSpec s{Cochain(2, ns.structure.size(), m.modulus), n, m};
        TwistedComplex cx(ns.structure, s.params());
        std::vector<i64> counts;
        for (const auto& d : diagrams) counts.push_back(static_cast<i64>(count_colorings(d, ns.structure.op())));
        sampling::for_each_cochain(cx, 1, m, [&](const Cochain& eta) {
          s.cocycle = apply_coboundary(cx, eta, m);
          for (std::size_t k = 0; k < diagrams.size(); ++k) {
            require(state_sum(diagrams[k], ns.structure, s) == GroupRingElement::single(m.modulus, 0, counts[k]),
                    ns.name + " N=" + std::to_string(m.modulus) + " u=" + std::to_string(m.unit));
            ++checked;
          }
        });
      }
  return std::to_string(checked) + " state sums";
}

std::string reidemeister_invariance() {
  std::mt19937 rng(11);
  auto fams = diagram_families();
  std::size_t checked = 0, nontrivial = 0;
  for (const auto& tw : structures_with_tetrahedral())
    for (CoefficientModule m : {CoefficientModule(2, 1), CoefficientModule(3, 2), CoefficientModule(4, 1), CoefficientModule(4, 3),
                                CoefficientModule(5, 2)})
      for (i64 n : {1, 2}) {
        StateSumSpec s{Cochain(2, tw.size(), m.modulus), n, m};
        CohomologyResult z = cocycle_space(tw, s.params(), 2, m);
        for (int trial = 0; trial < 3; ++trial) {
          s.cocycle = random_combination(z.basis, 2, tw.size(), m.modulus, rng);
          for (const auto& fam : fams) {
            GroupRingElement first = state_sum(fam.variants[0], tw, s);
            nontrivial += first.terms().size() > 1;
            for (std::size_t k = 1; k < fam.variants.size(); ++k) {
              require(state_sum(fam.variants[k], tw, s) == first, fam.name + " variant " + std::to_string(k));
              ++checked;
            }
          }
        }
      }
  require(nontrivial > 0, "every state sum was concentrated on one element");
  return std::to_string(checked) + " comparisons, " + std::to_string(nontrivial) + " non-trivial values";
}

std::string alexander_numbering_suite() {
  std::vector<braids::Closure> closures;
  for (auto [s, w] : std::vector<std::pair<int, std::vector<int>>>{{2, {-1, -1, -1}},
                                                                    {3, {1, -2, 1, -2}},
                                                                    {2, {1, 1}},
                                                                    {3, {1, 1, -2, 1, -2}},
                                                                    {3, {-1, 2, 2, -1, 2}},
                                                                    {3, {1, -2, 1, -2, 1, -2}},
                                                                    {2, {1, 1, 1, 1, 1}}})
    closures.push_back(braids::close(s, w));
  std::size_t crossings = 0;
  for (const auto& c : closures) {
    PDDiagram d = parse_pd(c.pd);
    RegionMap rm = alexander_numbering(d);
    auto num = [&](int face) { return rm.numbering[static_cast<std::size_t>(face)]; };
    for (int x = 0; x < d.crossing_count(); ++x) {
      std::multiset<int> around;
      for (int face : rm.corner[static_cast<std::size_t>(x)]) around.insert(num(face));
      int k = rm.crossing_numbering[static_cast<std::size_t>(x)];
      require(around == std::multiset<int>{k, k + 1, k + 1, k + 2}, c.pd + ": regions around a crossing");
      require(num(rm.source_region[static_cast<std::size_t>(x)]) == k, c.pd + ": source is not minimal");
      ++crossings;
    }
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
      require(alexander_numbering(d, seed).numbering == rm.numbering, c.pd + ": depends on BFS order");
    RegionMap mr = alexander_numbering(parse_pd(c.pd + "mirror\n"));
    require(mr.numbering[static_cast<std::size_t>(mr.outer)] == 0, "mirror outer region");
    for (int a = 0; a < d.arc_count(); ++a)
      require(mr.numbering[static_cast<std::size_t>(mr.right_face[static_cast<std::size_t>(a)])] ==
                  -num(rm.left_face[static_cast<std::size_t>(a)]),
              c.pd + ": mirror does not negate");
  }
  return std::to_string(closures.size()) + " diagrams, " + std::to_string(crossings) + " crossings";
}

std::string surfaces_and_normalization() {
  std::mt19937 rng(23);
  YBOperator op = from_quandle(tetrahedral_quandle());
  std::size_t surfaces = 0, shifts = 0;
  for (const auto& f : automorphisms(op)) {
    TwistedYBSet tw(op, f);
    for (CoefficientModule m : {CoefficientModule(2, 1), CoefficientModule(4, 3)}) {
      StateSumSpec s{Cochain(3, 4, m.modulus), 1, m};
      TwistedComplex cx(tw, s.params());
      for (int trial = 0; trial < 3; ++trial) {
        s.cocycle = apply_coboundary(cx, sampling::random_cochain(cx, 2, m, rng), m);
        std::string file;
        int groups = 1 + static_cast<int>(rng() % 5);
        for (int g = 0; g < groups; ++g) {
          file += "coloring c" + std::to_string(g) + "\n";
          for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
            std::string xyz = std::to_string(rng() % 4) + " " + std::to_string(rng() % 4) + " " + std::to_string(rng() % 4);
            std::string L = std::to_string(static_cast<int>(rng() % 7) - 3);
            file += "triple " + xyz + " 1 " + L + "\ntriple " + xyz + " -1 " + L + "\n";
          }
        }
        require(surface_state_sum(parse_triple_points(file, 4), tw, s) == GroupRingElement::single(m.modulus, 0, groups),
                "surface sum with a coboundary");
        ++surfaces;
      }
    }
  }
  for (CoefficientModule m : {CoefficientModule(5, 2), CoefficientModule(7, 3), CoefficientModule(9, 2), CoefficientModule(8, 3)})
    for (int trial = 0; trial < 50; ++trial) {
      GroupRingElement e(m.modulus);
      for (int k = 0; k < 4; ++k) e.add(static_cast<i64>(rng() % m.modulus), static_cast<i64>(rng() % 7) - 3);
      GroupRingElement n = normalize_up_to_T(e, m);
      require(normalize_up_to_T(n, m) == n, "normalization is not idempotent");
      for (int k = -3; k <= 3; ++k) require(normalize_up_to_T(e.act(m, k), m) == n, "normalization is not orbit-constant");
    }
  for (const auto& f : automorphisms(op)) {
    if (f.order() == 1) continue;
    TwistedYBSet tw(op, f);
    const i64 p = f.order();
    CoefficientModule m(4, 3);
    StateSumSpec s{Cochain(2, 4, 4), 1, m};
    CohomologyResult z = cocycle_space(tw, s.params(), 2, m);
    for (const auto& fam : diagram_families())
      for (const auto& d : fam.variants) {
        s.cocycle = random_combination(z.basis, 2, 4, 4, rng);
        std::vector<i64> L = mod_p_numbering(alexander_numbering(d), p);
        GroupRingElement base = mod_p_state_sum(d, tw, s, L, p);
        for (i64 shift = 1; shift <= p; ++shift) {
          std::vector<i64> moved = L;
          for (auto& k : moved) k += shift;
          require(mod_p_state_sum(d, tw, s, moved, p) == base, fam.name + ": shifted numbering changes the value");
          ++shifts;
        }
      }
  }
  return std::to_string(surfaces) + " surface sums, " + std::to_string(shifts) + " shifted mod-p sums";
}

struct Criterion {
  int id;
  std::string name;
  double budget_ms;  // 0: no budget
  std::function<std::string()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "axiom suite on the example families", 1000, axiom_suite},
      {2, "twisted operators preserve YBE and class", 5000, twisted_operators},
      {3, "face maps reproduce the cocycle conditions", 0, face_map_anchor},
      {4, "d d = 0 and precubical identities", 60000, chain_complex_suite},
      {5, "exponent shift scales coboundaries by u^k", 0, exponent_shift},
      {6, "Z^2 dimension equals brute-force count", 0, cocycle_oracle},
      {7, "extension scan has no counterexamples", 10000, extension_scan},
      {8, "coloring counts match brute force", 0, coloring_counts},
      {9, "coboundary state sums count colorings", 0, coboundary_state_sums},
      {10, "state sums agree across Reidemeister variants", 0, reidemeister_invariance},
      {11, "Alexander numbering", 0, alexander_numbering_suite},
      {12, "surface sums, normalization and mod-p shifts", 0, surfaces_and_normalization},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_ms > 0 && ms > c.budget_ms) {
      ok = false;
      detail += "; over the " + std::to_string(static_cast<int>(c.budget_ms)) + " ms budget";
    }
    failed += !ok;
    std::printf("%s  %2d  %-48s %9.1f ms  %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), ms, detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
