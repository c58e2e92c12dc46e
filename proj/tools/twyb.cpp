// twyb: command-line front end. Exit codes: 0 ok, 1 mathematical failure,
// 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "twyb/twyb.hpp"

namespace {

using namespace twyb;
using nlohmann::json;

/// Unreadable files, bad flag values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output lines, the report and the exit status of one invocation.
struct Session {
  report::CommandReport rep;
  std::vector<std::string> lines;
  unsigned jobs = 1;
  bool timing = false;
  bool json_only = false;
  int status = 0;

  void say(std::string s) { lines.push_back(std::move(s)); }
  void input(std::string role, std::string source, std::string content) {
    rep.inputs.push_back({std::move(role), std::move(source), std::move(content)});
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<i64> split_integers(const std::string& s, char sep = ',') {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("expected integers separated by '" + std::string(1, sep) + "', got '" + s + "'");
    }
  }
  return out;
}

CoefficientModule parse_module(const std::string& s) {
  auto v = split_integers(s);
  if (v.size() != 2) throw InputError("--module expects N,u");
  try {
    return CoefficientModule(v[0], v[1]);
  } catch (const ValidationError& e) {
    throw InputError(std::string("--module: ") + e.what());
  }
}

struct LoadedStructure {
  YBOperator op;
  std::optional<Twist> twist;
  std::vector<std::string> labels;

  TwistedYBSet twisted() const { return TwistedYBSet(op, twist ? *twist : Twist::identity(op.size())); }
};

/// A structure file, or `builtin:<family>[:args]` for the built-in families.
LoadedStructure load_structure(Session& s, const std::string& spec, const std::string& f_override) {
  LoadedStructure out{YBOperator::from_function(1, [](int, int) { return Pair{0, 0}; }), std::nullopt, {}};
  if (spec.rfind("builtin:", 0) == 0) {
    std::string rest = spec.substr(8);
    std::string family = rest.substr(0, rest.find(':'));
    std::vector<i64> args = rest.find(':') == std::string::npos ? std::vector<i64>{} : split_integers(rest.substr(rest.find(':') + 1), ':');
    auto need = [&](std::size_t k) {
      if (args.size() != k) throw InputError("builtin " + family + " takes " + std::to_string(k) + " argument(s)");
    };
    if (family == "cyclic") {
      need(1);
      out.op = cyclic_biquandle(static_cast<int>(args[0]));
    } else if (family == "dihedral") {
      need(1);
      out.op = dihedral_biquandle(static_cast<int>(args[0]));
    } else if (family == "trivial") {
      need(1);
      out.op = from_quandle(trivial_quandle(static_cast<int>(args[0])));
    } else if (family == "tetrahedral") {
      need(0);
      out.op = from_quandle(tetrahedral_quandle());
    } else if (family == "alexander") {
      need(3);
      out.op = alexander_biquandle(static_cast<int>(args[0]), args[1], args[2]);
    } else if (family == "wada-s3" || family == "wada2-s3") {
      need(0);
      FiniteGroup g = symmetric_group(3);
      out.op = family == "wada-s3" ? wada(g) : wada_second(g);
      out.labels = g.labels;
    } else {
      throw InputError("unknown builtin family '" + family + "'");
    }
    if (args.size() && (args[0] <= 0 || args[0] > 64)) throw InputError("builtin size out of range");
    s.input("structure", spec, spec);
  } else {
    std::string text = read_file(spec);
    s.input("structure", spec, text);
    StructureFile f = parse_structure(text);
    out.op = std::move(f.op);
    out.twist = std::move(f.twist);
    out.labels = std::move(f.labels);
  }
  if (!f_override.empty()) {
    std::vector<int> perm;
    for (i64 v : split_integers(f_override)) perm.push_back(static_cast<int>(v));
    if (static_cast<int>(perm.size()) != out.op.size()) throw InputError("--f must list one image per element");
    try {
      out.twist = Twist(std::move(perm));
    } catch (const Error& e) {
      throw InputError(std::string("--f: ") + e.what());
    }
  }
  return out;
}

PDDiagram load_diagram(Session& s, const std::string& arg) {
  std::string text;
  if (std::filesystem::is_regular_file(arg)) {
    text = read_file(arg);
    s.input("diagram", arg, text);
  } else {
    text = arg;
    s.input("diagram", "inline", text);
  }
  return parse_pd(text);
}

CochainBlock load_cochain(Session& s, const std::string& role, const std::string& path, int size) {
  std::string text = read_file(path);
  s.input(role, path, text);
  auto blocks = parse_cochains(text, size);
  if (blocks.size() != 1) throw InputError(path + ": expected exactly one cochain block");
  return blocks.front();
}

json tuple_json(const std::vector<int>& t) { return json(t); }

json shape_json(const ModuleShape& m) { return {{"orders", m.orders}, {"rank", m.rank()}}; }

std::string shape_text(const ModuleShape& m, i64 N) {
  if (m.orders.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < m.orders.size(); ++k) s += (k ? " + " : "") + std::string("Z/") + std::to_string(m.orders[k]);
  s += " (" + std::to_string(m.rank()) + " cyclic factor" + (m.rank() == 1 ? "" : "s") + " over Z/" + std::to_string(N) + ")";
  return s;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

TwistParams twist_params(const std::string& twist, const std::string& variant, const std::string& mode) {
  auto v = split_integers(twist);
  if (v.size() != 3) throw InputError("--twist expects t,m1,m2");
  TwistParams p{v[0], v[1], v[2], Variant::TYB, TwistMode::Coordinate};
  if (variant == "tyb") p.variant = Variant::TYB;
  else if (variant == "td") p.variant = Variant::TD;
  else if (variant == "tbq") p.variant = Variant::TBQ;
  else throw InputError("--variant must be tyb, td or tbq");
  if (mode == "coord") p.mode = TwistMode::Coordinate;
  else if (mode == "scalar") p.mode = TwistMode::Scalar;
  else throw InputError("--mode must be coord or scalar");
  return p;
}

// ---------------------------------------------------------------------------
// Commands

void cmd_verify(Session& s, const std::string& structure, const std::string& f) {
  LoadedStructure st = load_structure(s, structure, f);
  AxiomReport a = analyze(st.op, s.jobs);
  auto component = ybe_component_violation(st.op, s.jobs);
  if (a.invertible && a.ybe() != !component.has_value())
    throw InternalConsistencyError("composite and componentwise braid checks disagree");
  json r;
  r["size"] = st.op.size();
  r["invertible"] = a.invertible;
  r["yang_baxter"] = a.ybe();
  if (a.ybe_witness) r["yang_baxter_witness"] = tuple_json({(*a.ybe_witness)[0], (*a.ybe_witness)[1], (*a.ybe_witness)[2]});
  if (a.collision) r["collision"] = {{a.collision->first.first, a.collision->first.second}, {a.collision->second.first, a.collision->second.second}};
  r["birack"] = a.birack();
  r["biquandle"] = a.biquandle();
  if (a.left_witness) r["left_witness"] = {a.left_witness->first, a.left_witness->second};
  if (a.right_witness) r["right_witness"] = {a.right_witness->first, a.right_witness->second};
  if (a.type1_witness) r["type1_witness"] = *a.type1_witness;
  s.say("size: " + std::to_string(st.op.size()));
  s.say(std::string("invertible: ") + yes(a.invertible));
  std::string ybe = std::string("yang-baxter: ") + yes(a.ybe());
  if (a.ybe_witness)
    ybe += " (fails at x, y, z = " + std::to_string((*a.ybe_witness)[0]) + ", " + std::to_string((*a.ybe_witness)[1]) + ", " +
           std::to_string((*a.ybe_witness)[2]) + ")";
  s.say(ybe);
  s.say(std::string("birack: ") + yes(a.birack()));
  s.say(std::string("biquandle: ") + yes(a.biquandle()));
  bool ok = a.yb_set();
  if (ok) {
    StructureClass c = classify(st.op, s.jobs);
    r["class"] = to_string(c.kind);
    s.say("class: " + to_string(c.kind));
  }
  Twist f_eff = st.twist ? *st.twist : Twist::identity(st.op.size());
  auto tw = equivariance_violation(st.op, f_eff);
  r["twist"] = !tw.has_value();
  r["twist_given"] = st.twist.has_value();
  r["twist_order"] = f_eff.order();
  if (tw) r["twist_witness"] = {tw->first, tw->second};
  std::string line = std::string("twist: ") + yes(!tw);
  if (tw) line += " (f x R != R x f at " + std::to_string(tw->first) + ", " + std::to_string(tw->second) + ")";
  if (!st.twist) line += " (identity)";
  s.say(line);
  if (!st.labels.empty()) r["labels"] = st.labels;
  s.rep.result = r;
  if (!ok || tw) s.status = 1;
}

void cmd_twist_op(Session& s, const std::string& structure, const std::string& f, i64 t, const std::string& out) {
  LoadedStructure st = load_structure(s, structure, f);
  TwistedYBSet tw = st.twisted();
  TwistedYBSet q = twisted_set(tw, t);
  bool yb = verify_ybe(q.op(), s.jobs);
  StructureClass before = classify(tw, s.jobs);
  std::string text = write_structure(q.op(), q.twist(), st.labels);
  json r{{"t", t}, {"yang_baxter", yb}, {"class_before", to_string(before.kind)}};
  s.say("t: " + std::to_string(t));
  s.say(std::string("yang-baxter: ") + yes(yb));
  if (yb) {
    StructureClass after = classify(q, s.jobs);
    r["class_after"] = to_string(after.kind);
    r["class_preserved"] = after.kind == before.kind;
    s.say("class: " + to_string(before.kind) + " -> " + to_string(after.kind));
    if (after.kind != before.kind) s.status = 1;
  } else {
    s.status = 1;
  }
  if (!out.empty()) {
    write_file(out, text);
    r["output"] = out;
  } else {
    r["structure"] = text;
    s.say(text.substr(0, text.size() - 1));
  }
  s.rep.result = r;
}

/// Crossings use the twisted operator for t != 0; such results depend on that choice.
void note_crossing_convention(Session& s, json& r, const TwistParams& p) {
  r["convention_dependent"] = p.t != 0;
  if (p.t != 0) s.say("note: t != 0, crossings use the twisted operator; convention-dependent");
}

void cmd_cocycles(Session& s, const std::string& structure, const std::string& f, int degree, const std::string& module,
                  const std::string& twist, const std::string& variant, const std::string& mode, const std::string& out) {
  LoadedStructure st = load_structure(s, structure, f);
  CoefficientModule m = parse_module(module);
  TwistParams p = twist_params(twist, variant, mode);
  if (degree < 1 || degree > 6) throw InputError("--degree must be in 1..6");
  TwistedComplex cx(st.twisted(), p, {std::uint64_t{1} << 27, s.jobs});
  CohomologyResult res = cohomology(cx, degree, m);
  std::string basis;
  for (const auto& c : res.basis) basis += write_cochain(c, m);
  json r{{"degree", degree},
         {"module", {m.modulus, m.unit}},
         {"twist", {p.t, p.m1, p.m2}},
         {"variant", to_string(p.variant)},
         {"mode", to_string(p.mode)},
         {"cocycles", shape_json(res.cocycles)},
         {"coboundaries", shape_json(res.coboundaries)},
         {"cohomology", shape_json(res.cohomology)},
         {"basis_orders", res.basis_orders}};
  s.say("complex: " + to_string(p.variant) + " (t, m1, m2) = (" + std::to_string(p.t) + ", " + std::to_string(p.m1) + ", " +
        std::to_string(p.m2) + "), " + to_string(p.mode) + " twist, M = Z/" + std::to_string(m.modulus) + " u = " +
        std::to_string(m.unit));
  s.say("cocycles Z^" + std::to_string(degree) + ": " + shape_text(res.cocycles, m.modulus));
  s.say("coboundaries B^" + std::to_string(degree) + ": " + shape_text(res.coboundaries, m.modulus));
  s.say("cohomology H^" + std::to_string(degree) + ": " + shape_text(res.cohomology, m.modulus));
  if (res.basis.empty()) s.say("basis: the zero cochain only");
  note_crossing_convention(s, r, p);
  if (!out.empty()) {
    write_file(out, basis);
    r["output"] = out;
  } else {
    r["basis"] = basis;
    if (!basis.empty()) s.say(basis.substr(0, basis.size() - 1));
  }
  s.rep.result = r;
}

void cmd_homology(Session& s, const std::string& structure, const std::string& f, int degree, const std::string& module,
                  const std::string& twist, const std::string& variant, const std::string& mode) {
  LoadedStructure st = load_structure(s, structure, f);
  CoefficientModule m = parse_module(module);
  TwistParams p = twist_params(twist, variant, mode);
  if (degree < 1 || degree > 6) throw InputError("--degree must be in 1..6");
  TwistedComplex cx(st.twisted(), p, {std::uint64_t{1} << 27, s.jobs});
  ModuleShape h = homology(cx, degree, m);
  s.say("homology H_" + std::to_string(degree) + ": " + shape_text(h, m.modulus));
  json r{{"degree", degree}, {"module", {m.modulus, m.unit}}, {"twist", {p.t, p.m1, p.m2}},
         {"variant", to_string(p.variant)}, {"mode", to_string(p.mode)}, {"homology", shape_json(h)}};
  note_crossing_convention(s, r, p);
  s.rep.result = r;
}

json numbering_json(const PDDiagram& d, const RegionMap& rm) {
  json signs = json::array();
  for (const auto& x : d.crossings) signs.push_back(x.sign);
  return {{"crossings", d.crossing_count()},     {"components", d.components}, {"writhe", d.writhe()},
          {"signs", signs},                      {"faces", rm.faces.size()},   {"region_numbers", rm.numbering},
          {"crossing_numbers", rm.crossing_numbering}};
}

void cmd_color(Session& s, const std::string& diagram, const std::string& structure, const std::string& f, bool list) {
  PDDiagram d = load_diagram(s, diagram);
  LoadedStructure st = load_structure(s, structure, f);
  TwistedYBSet tw = st.twisted();
  RegionMap rm = alexander_numbering(d);
  std::vector<Coloring> cs = enumerate_colorings(d, tw, s.jobs);
  json r = numbering_json(d, rm);
  r["colorings"] = cs.size();
  s.say("crossings: " + std::to_string(d.crossing_count()) + ", writhe " + std::to_string(d.writhe()) + ", components " +
        std::to_string(d.components));
  s.say("colorings: " + std::to_string(cs.size()));
  if (list) {
    r["list"] = cs;
    for (const auto& c : cs) {
      std::string line;
      for (std::size_t k = 0; k < c.size(); ++k) line += (k ? " " : "") + (st.labels.empty() ? std::to_string(c[k]) : st.labels[static_cast<std::size_t>(c[k])]);
      s.say("  " + line);
    }
  }
  s.rep.result = r;
}

void cmd_invariant(Session& s, const std::string& diagram, const std::string& structure, const std::string& f,
                   const std::string& cocycle, i64 n, bool mod_p, const std::string& numbering, bool normalize) {
  PDDiagram d = load_diagram(s, diagram);
  LoadedStructure st = load_structure(s, structure, f);
  TwistedYBSet tw = st.twisted();
  CochainBlock c = load_cochain(s, "cocycle", cocycle, tw.size());
  if (c.cochain.degree != 2) throw InputError("knot invariants need a degree-2 cocycle");
  StateSumSpec spec{c.cochain, n, c.module};
  RegionMap rm = alexander_numbering(d);
  json r = numbering_json(d, rm);
  r["n"] = n;
  r["module"] = {c.module.modulus, c.module.unit};
  GroupRingElement phi;
  if (mod_p) {
    const i64 p = tw.twist().order();
    std::optional<std::vector<i64>> L;
    if (numbering.empty()) L = mod_p_numbering(rm, p);
    else if (numbering != "undefined") L = split_integers(numbering);
    phi = mod_p_state_sum(d, tw, spec, L, p, s.jobs);
    r["p"] = p;
    r["numbering_defined"] = L.has_value();
    s.say("mod-" + std::to_string(p) + " state sum, reported up to T");
  } else {
    phi = state_sum(d, tw, spec, s.jobs);
  }
  r["phi"] = phi.to_string();
  r["terms"] = json::array();
  for (auto [g, k] : phi.terms()) r["terms"].push_back({g, k});
  s.say("phi = " + phi.to_string());
  if (normalize && !mod_p) {
    GroupRingElement nf = normalize_up_to_T(phi, c.module);
    r["phi_normalized"] = nf.to_string();
    s.say("phi up to T = " + nf.to_string());
  }
  s.rep.result = r;
}

void cmd_surface(Session& s, const std::string& triples, const std::string& structure, const std::string& f,
                 const std::string& cocycle, i64 n, bool normalize) {
  LoadedStructure st = load_structure(s, structure, f);
  TwistedYBSet tw = st.twisted();
  std::string text = read_file(triples);
  s.input("triples", triples, text);
  TriplePointData data = parse_triple_points(text, tw.size());
  CochainBlock c = load_cochain(s, "cocycle", cocycle, tw.size());
  if (c.cochain.degree != 3) throw InputError("surface invariants need a degree-3 cocycle");
  GroupRingElement phi = surface_state_sum(data, tw, {c.cochain, n, c.module});
  json r{{"colorings", data.colorings.size()}, {"n", n}, {"module", {c.module.modulus, c.module.unit}}, {"phi", phi.to_string()}};
  s.say("colorings: " + std::to_string(data.colorings.size()));
  s.say("phi = " + phi.to_string());
  if (normalize) {
    GroupRingElement nf = normalize_up_to_T(phi, c.module);
    r["phi_normalized"] = nf.to_string();
    s.say("phi up to T = " + nf.to_string());
  }
  s.rep.result = r;
}

void cmd_extension(Session& s, const std::string& structure, const std::string& f, const std::string& module,
                   const std::string& phi1, const std::string& phi2, i64 m1, i64 m2, const std::string& out,
                   const std::string& emit_structure) {
  LoadedStructure st = load_structure(s, structure, f);
  TwistedYBSet tw = st.twisted();
  CoefficientModule m = parse_module(module);
  CochainBlock a = load_cochain(s, "phi1", phi1, tw.size());
  CochainBlock b = load_cochain(s, "phi2", phi2, tw.size());
  if (!(a.module == m) || !(b.module == m)) throw InputError("cochain headers do not match --module");
  ExtensionData e{tw, m, a.cochain, b.cochain, m1, m2};
  ExtensionCocycle c = extension_cocycle(e, s.jobs);
  std::string phi = write_cochain(c.phi, m);
  json r{{"module", {m.modulus, m.unit}}, {"m1", m1}, {"m2", m2}, {"carrier", m.modulus * tw.size()},
         {"yang_baxter", c.yang_baxter}, {"cocycle", static_cast<bool>(c.check)}};
  if (!c.check) r["cocycle_reason"] = c.check.reason;
  s.say("extension carrier: " + std::to_string(m.modulus * tw.size()) + " elements");
  s.say(std::string("S is Yang-Baxter: ") + yes(c.yang_baxter));
  s.say(std::string("phi is a 2-cocycle: ") + yes(static_cast<bool>(c.check)) + (c.check ? "" : " (" + c.check.reason + ")"));
  if (!out.empty()) {
    write_file(out, phi);
    r["output"] = out;
  } else {
    r["phi"] = phi;
  }
  if (!emit_structure.empty()) {
    write_file(emit_structure, write_structure(build_extension(e, 4096, s.jobs).op));
    r["structure_output"] = emit_structure;
  }
  s.rep.result = r;
}

}  // namespace

int main(int argc, char** argv) {
  Session s;
  CLI::App app{"Twisted Yang-Baxter sets: axioms, cohomology, extensions and state-sum invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", s.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", s.timing, "add elapsed time to the report");
  app.add_flag("--json", s.json_only, "print only the JSON report");

  std::string structure, f, module = "2,1", twist = "0,0,0", variant = "tyb", mode = "coord", out, diagram, cocycle,
                               triples, phi1, phi2, numbering, emit;
  int degree = 2;
  i64 t = 1, n = 1, m1 = 0, m2 = 0;
  bool list = false, mod_p = false, normalize = false;

  auto structure_opt = [&](CLI::App* c) {
    c->add_option("--structure", structure, "structure file or builtin:<family>[:args]")->required();
    c->add_option("--f", f, "override the twist: comma-separated images f(0),f(1),...");
  };
  auto complex_opts = [&](CLI::App* c) {
    c->add_option("--degree", degree, "cochain degree");
    c->add_option("--module", module, "coefficients Z/N with T acting by u, as N,u");
    c->add_option("--twist", twist, "t,m1,m2");
    c->add_option("--variant", variant, "tyb, td or tbq");
    c->add_option("--mode", mode, "coord or scalar");
  };

  auto* verify = app.add_subcommand("verify", "check the axioms of a structure");
  structure_opt(verify);
  auto* twop = app.add_subcommand("twist-op", "build the twisted operator T^t R");
  structure_opt(twop);
  twop->add_option("--t", t, "twist exponent");
  twop->add_option("--out", out, "write the structure here");
  auto* coc = app.add_subcommand("cocycles", "cocycles, coboundaries and cohomology");
  structure_opt(coc);
  complex_opts(coc);
  coc->add_option("--out", out, "write the cocycle basis here");
  auto* hom = app.add_subcommand("homology", "homology of the chain complex");
  structure_opt(hom);
  complex_opts(hom);
  auto* color = app.add_subcommand("color", "colorings of a diagram");
  color->add_option("--diagram", diagram, "PD file or inline PD code")->required();
  structure_opt(color);
  color->add_flag("--list", list, "print every coloring");
  auto* inv = app.add_subcommand("invariant", "state-sum invariant of a diagram");
  inv->add_option("--diagram", diagram, "PD file or inline PD code")->required();
  structure_opt(inv);
  inv->add_option("--cocycle", cocycle, "degree-2 cochain file")->required();
  inv->add_option("--n", n, "weight exponent n");
  inv->add_flag("--mod-p", mod_p, "use crossing numbers mod the order of f");
  inv->add_option("--numbering", numbering, "mod-p crossing numbers a,b,...; 'undefined' gives 0");
  inv->add_flag("--normalize-T", normalize, "also print the normal form up to T");
  auto* surf = app.add_subcommand("surface-invariant", "state sum over supplied triple-point data");
  surf->add_option("--triples", triples, "triple-point file")->required();
  structure_opt(surf);
  surf->add_option("--cocycle", cocycle, "degree-3 cochain file")->required();
  surf->add_option("--n", n, "weight exponent n");
  surf->add_flag("--normalize-T", normalize, "also print the normal form up to T");
  auto* ext = app.add_subcommand("extension", "abelian extension by a pair of maps");
  structure_opt(ext);
  ext->add_option("--module", module, "N,u")->required();
  ext->add_option("--phi1", phi1, "cochain file")->required();
  ext->add_option("--phi2", phi2, "cochain file")->required();
  ext->add_option("--m1", m1);
  ext->add_option("--m2", m2);
  ext->add_option("--out", out, "write phi here");
  ext->add_option("--emit-structure", emit, "write the extension operator here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (int k = 0; k < argc; ++k) s.rep.command += (k ? " " : "") + std::string(k == 0 ? "twyb" : argv[k]);
  auto start = std::chrono::steady_clock::now();
  try {
    if (*verify) cmd_verify(s, structure, f);
    else if (*twop) cmd_twist_op(s, structure, f, t, out);
    else if (*coc) cmd_cocycles(s, structure, f, degree, module, twist, variant, mode, out);
    else if (*hom) cmd_homology(s, structure, f, degree, module, twist, variant, mode);
    else if (*color) cmd_color(s, diagram, structure, f, list);
    else if (*inv) cmd_invariant(s, diagram, structure, f, cocycle, n, mod_p, numbering, normalize);
    else if (*surf) cmd_surface(s, triples, structure, f, cocycle, n, normalize);
    else if (*ext) cmd_extension(s, structure, f, module, phi1, phi2, m1, m2, out, emit);
  } catch (const ValidationError& e) {
    std::cerr << "twyb: " << e.what() << '\n';
    return 1;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "twyb: internal consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "twyb: " << e.what() << '\n';
    return 2;
  }
  if (s.timing)
    s.rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!s.json_only) {
    for (const auto& l : s.lines) std::cout << l << '\n';
    std::cout << "--- report\n";
  }
  std::cout << s.rep.to_json().dump(2) << '\n';
  return s.status;
}
