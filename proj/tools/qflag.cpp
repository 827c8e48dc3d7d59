#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qflag/artheory.hpp"
#include "qflag/extended.hpp"
#include "qflag/grassmann.hpp"
#include "qflag/io.hpp"
#include "qflag/paving.hpp"

using namespace qflag;

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kUnresolved = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string path;
  QuiverPtr q;
  QuiverShape shape;
};

Loaded load(const std::string& path) {
  Loaded l{path, load_quiver(path), {}};
  try {
    l.shape = classify(*l.q);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return l;
}

void require_dynkin(const Loaded& l, const std::string& what) {
  if (!l.shape.dynkin()) {
    if (l.shape.affine())
      throw UsageError(what + ": " + l.shape.name() + " is of affine type, which is out of scope");
    throw UsageError(what + ": the quiver is not of Dynkin type");
  }
}

// A file path holding a representation, or a dimension vector naming the knitted indecomposable.
QRep resolve_rep(const Loaded& l, const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    try {
      return rep_from_json(read_json_file(spec), l.q);
    } catch (const ParseError& e) {
      std::string m = e.what();
      throw ParseError(m.rfind(spec, 0) == 0 ? m : spec + ": " + m);
    }
  }
  require_dynkin(l, "indecomposable " + spec);
  DimVec v;
  try {
    v = parse_dimvec(l.shape, spec);
  } catch (const std::exception& e) {
    throw UsageError("cannot read dimension vector '" + spec + "': " + e.what());
  }
  const auto& ar = ar_quiver(l.q);
  auto i = ar.find(v);
  if (!i) throw UsageError(format_stacked(l.shape, v) + " is not a positive root");
  return ar.nodes[*i].rep;
}

size_t resolve_node(const Loaded& l, const std::string& spec) {
  require_dynkin(l, spec);
  const auto& ar = ar_quiver(l.q);
  auto roots = decompose(resolve_rep(l, spec));
  if (roots.size() != 1 || roots.begin()->second != 1) throw UsageError(spec + " is not indecomposable");
  return ar.node(roots.begin()->first);
}

std::string rep_label(const Loaded& l, const QRep& m) {
  if (!l.shape.dynkin()) return dimvec_str(m.dims);
  std::string s;
  for (const auto& [root, mult] : decompose(m))
    for (long i = 0; i < mult; ++i) s += (s.empty() ? "" : "+") + format_stacked(l.shape, root);
  return s.empty() ? "0" : s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "1,0,1|1,1,1" per level, or a flat comma list in level-major order.
DimVec parse_extended(const Loaded& l, const ExtendedQuiver& eq, const std::string& text) {
  auto parts = split(text, '|');
  DimVec f;
  try {
    if (parts.size() == 1 && eq.d > 1) {
      std::string s;
      for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s += c;
      for (const auto& x : split(s, ',')) f.push_back(std::stol(x));
    } else {
      for (const auto& p : parts) {
        auto v = parse_dimvec(l.shape, p);
        if (v.size() != eq.n()) throw std::invalid_argument("level has the wrong length");
        f.insert(f.end(), v.begin(), v.end());
      }
    }
  } catch (const std::exception& e) {
    throw UsageError("cannot read extended dimension vector '" + text + "': " + e.what());
  }
  if (f.size() != eq.n() * (size_t)eq.d)
    throw UsageError("extended dimension vector '" + text + "' needs " + std::to_string(eq.n() * eq.d) + " entries");
  return f;
}

PrimeField field_for(uint32_t p, const QRep& m) {
  PrimeField k;
  try {
    k = PrimeField(p);
  } catch (const std::exception& e) {
    throw UsageError("--q " + std::to_string(p) + ": " + e.what());
  }
  if (!prime_is_safe(m, p)) throw UsageError("reduction modulo " + std::to_string(p) + " does not preserve the representation");
  return k;
}

void emit(const json& j, bool pretty = true) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

struct Selectors {
  std::string quiver;
  std::string root, rep_file;
  int d = 1;
  bool strict = false;
  std::vector<std::string> f;
  bool all_f = false;
  std::vector<uint32_t> primes;
  uint64_t max_nodes = 0;
};

void add_selectors(CLI::App* c, Selectors& s) {
  c->add_option("quiver", s.quiver, "quiver JSON file")->required();
  auto* r = c->add_option("--root", s.root, "dimension vector of an indecomposable");
  auto* f = c->add_option("--rep", s.rep_file, "representation JSON file");
  r->excludes(f);
  c->add_option("--d", s.d, "flag length")->check(CLI::PositiveNumber);
  c->add_flag("--strict", s.strict, "strict flags");
  auto* fo = c->add_option("--f", s.f, "extended dimension vector, e.g. 1,0|1,1");
  auto* af = c->add_flag("--all-f", s.all_f, "every extended dimension vector");
  fo->excludes(af);
  c->add_option("--q", s.primes, "field sizes (primes)");
  c->add_option("--max-nodes", s.max_nodes, "search node budget (also QP_MAX_NODES)");
}

struct Job {
  Loaded l;
  QRep m;
  std::string label;
  ExtendedQuiver eq;
  std::vector<DimVec> fs;
  EnumOptions opt;
};

Job make_job(const Selectors& s) {
  if (s.root.empty() && s.rep_file.empty()) throw UsageError("one of --root or --rep is required");
  if (s.f.empty() && !s.all_f) throw UsageError("one of --f or --all-f is required");
  Loaded l = load(s.quiver);
  QRep m = resolve_rep(l, s.root.empty() ? s.rep_file : s.root);
  ExtendedQuiver eq = build_extended(l.q, s.d, s.strict);
  Job j{l, m, rep_label(l, m), eq, {}, {}};
  if (s.max_nodes) j.opt.max_nodes = s.max_nodes;
  if (s.all_f) {
    double n = 1;
    for (auto x : phi_dims(eq, m.dims)) n *= (double)(x + 1);
    if (n > 1e6) throw UsageError("--all-f would visit " + std::to_string((long long)n) + " dimension vectors; pass --f");
    j.fs = all_dimvecs(phi_dims(eq, m.dims));
  }
  else
    for (const auto& t : s.f) j.fs.push_back(parse_extended(l, eq, t));
  for (const auto& f : j.fs)
    if (!leq(f, phi_dims(eq, m.dims))) throw UsageError("f=" + format_levels(eq, f) + " exceeds dim Phi(M)");
  return j;
}

mpz_class brute_f(const Job& j, const DimVec& f, const PrimeField& k, bool chains) {
  auto mp = reduce_mod(j.m, k);
  return chains ? count_flags_directly(*mp, j.eq.d, j.eq.strict, f, j.opt) : count_submodules(phi(*mp, j.eq), f, j.opt);
}

int cmd_roots(const std::string& type, int rank, bool maximal, bool delta, bool as_json) {
  Family fam;
  try {
    fam = parse_family(type);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Quiver q;
  try {
    q = standard_quiver(fam, rank);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  auto shape = classify(q);
  std::vector<DimVec> rows;
  if (shape.affine()) {
    if (maximal) throw UsageError("--maximal applies to Dynkin types; use --delta");
    rows.push_back(minimal_imaginary_root(q));
  } else {
    if (delta) throw UsageError("--delta applies to affine types; use --maximal");
    if (maximal)
      rows.push_back(maximal_root(q));
    else
      rows = positive_roots(q);
  }
  if (as_json) {
    json out = {{"type", family_name(shape.family)}, {"rank", shape.rank}, {"roots", json::array()}};
    for (const auto& r : rows)
      out["roots"].push_back({{"root", r}, {"label", format_stacked(shape, r)}, {"layout", format_layout(shape, r)}});
    emit(out);
    return kOk;
  }
  if (rows.size() == 1 && (maximal || delta || shape.affine())) {
    std::cout << format_layout(shape, rows[0]);
    return kOk;
  }
  for (const auto& r : rows) std::cout << format_stacked(shape, r) << "\n";
  return kOk;
}

int cmd_classify(const std::string& path, bool as_json) {
  Loaded l = load(path);
  if (as_json) {
    emit({{"family", family_name(l.shape.family)}, {"rank", l.shape.rank}, {"name", l.shape.name()},
          {"dynkin", l.shape.dynkin()}, {"affine", l.shape.affine()}});
  } else {
    std::cout << l.shape.name() << "\n";
  }
  return kOk;
}

int cmd_indec(const std::string& path, const std::string& root, bool as_json) {
  Loaded l = load(path);
  require_dynkin(l, "indec");
  const auto& ar = ar_quiver(l.q);
  if (!root.empty()) {
    auto m = resolve_rep(l, root);
    if (as_json)
      emit(rep_to_json(m));
    else
      std::cout << format_layout(l.shape, m.dims);
    return kOk;
  }
  if (as_json) {
    json out = json::array();
    for (size_t i = 0; i < ar.nodes.size(); ++i) out.push_back({{"root", ar.nodes[i].root}, {"label", ar.label(i)}});
    emit(out);
  } else {
    for (size_t i = 0; i < ar.nodes.size(); ++i) std::cout << ar.label(i) << "\n";
  }
  return kOk;
}

int cmd_hom_ext(const std::string& path, const std::string& a, const std::string& b, bool ext, int degree, int d,
                bool strict) {
  Loaded l = load(path);
  QRep m = resolve_rep(l, a), n = resolve_rep(l, b);
  long value;
  if (d > 0) {
    auto eq = build_extended(l.q, d, strict);
    value = ext_R(phi(m, eq), phi(n, eq), eq, ext ? degree : 0);
  } else if (!ext || degree == 0) {
    value = (long)hom_dim(m, n);
  } else if (degree == 1) {
    value = ext1_dim(m, n);
  } else {
    if (!l.q->acyclic()) throw UsageError("ext: the quiver has an oriented cycle");
    value = 0;
  }
  std::cout << value << "\n";
  return kOk;
}

std::string extended_dot(const ExtendedQuiver& eq) {
  std::ostringstream os;
  const Quiver& x = *eq.quiver;
  os << "digraph Extended {\n";
  for (size_t v = 0; v < x.num_vertices(); ++v) os << "  \"" << x.vertex(v) << "\";\n";
  for (const auto& a : x.arrows())
    os << "  \"" << x.vertex(a.src) << "\" -> \"" << x.vertex(a.tgt) << "\" [label=\"" << a.id << "\"];\n";
  for (const auto& c : eq.virtuals)
    os << "  \"" << x.vertex(c.src) << "\" -> \"" << x.vertex(c.tgt) << "\" [label=\"" << c.id << "\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

int cmd_extquiver(const std::string& path, int d, bool strict, bool as_json, const std::string& dot) {
  Loaded l = load(path);
  auto eq = build_extended(l.q, d, strict);
  const Quiver& x = *eq.quiver;
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw UsageError(dot + ": cannot write");
    out << extended_dot(eq);
  }
  if (as_json) {
    json j = quiver_to_json(x);
    j["virtual"] = json::array();
    for (const auto& c : eq.virtuals)
      j["virtual"].push_back({{"id", c.id},
                              {"from", x.vertex(c.src)},
                              {"to", x.vertex(c.tgt)},
                              {"paths", {{x.arrow(c.first1).id, x.arrow(c.second1).id},
                                         {x.arrow(c.first2).id, x.arrow(c.second2).id}}}});
    emit(j);
    return kOk;
  }
  std::cout << "vertices " << x.num_vertices() << "\narrows " << x.num_arrows() << "\nvirtual " << eq.virtuals.size()
            << "\n";
  for (const auto& a : x.arrows()) std::cout << a.id << ": " << x.vertex(a.src) << " -> " << x.vertex(a.tgt) << "\n";
  for (const auto& c : eq.virtuals)
    std::cout << c.id << ": " << x.vertex(c.src) << " => " << x.vertex(c.tgt) << " (" << x.arrow(c.second1).id << " "
              << x.arrow(c.first1).id << " = " << x.arrow(c.second2).id << " " << x.arrow(c.first2).id << ")\n";
  return kOk;
}

int cmd_phi(const std::string& path, const std::string& spec, int d, bool strict) {
  Loaded l = load(path);
  auto eq = build_extended(l.q, d, strict);
  emit(bound_module_to_json(phi(resolve_rep(l, spec), eq), eq));
  return kOk;
}

int cmd_ar(const std::string& path, const std::string& dot, bool as_json) {
  Loaded l = load(path);
  require_dynkin(l, "ar");
  const auto& ar = ar_quiver(l.q);
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw UsageError(dot + ": cannot write");
    out << to_dot(ar);
  }
  size_t dashed = 0;
  for (const auto& n : ar.nodes) dashed += n.tau >= 0;
  if (as_json) {
    json nodes = json::array(), arrows = json::array();
    for (size_t i = 0; i < ar.nodes.size(); ++i) {
      const auto& n = ar.nodes[i];
      nodes.push_back({{"index", i},
                       {"root", n.root},
                       {"label", ar.label(i)},
                       {"projective", n.projective},
                       {"injective", n.injective},
                       {"tau", n.tau},
                       {"successors", json::array()}});
    }
    for (const auto& a : ar.arrows) {
      arrows.push_back({a.from, a.to});
      nodes[a.from]["successors"].push_back(a.to);
    }
    emit({{"nodes", nodes}, {"arrows", arrows}, {"tau_arrows", dashed}});
    return kOk;
  }
  std::cout << "nodes " << ar.nodes.size() << "\nirreducible " << ar.arrows.size() << "\ntau " << dashed << "\n";
  for (size_t i = 0; i < ar.nodes.size(); ++i) {
    const auto& n = ar.nodes[i];
    std::cout << i << " " << ar.label(i);
    if (n.projective) std::cout << " P";
    if (n.injective) std::cout << " I";
    if (n.tau >= 0) std::cout << " tau=" << ar.label((size_t)n.tau);
    std::cout << " ->";
    for (auto a : ar.out[i]) std::cout << " " << ar.arrows[a].to;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_tau(const std::string& path, const std::string& spec, bool inverse_dir) {
  Loaded l = load(path);
  QRep m = resolve_rep(l, spec);
  QRep t = inverse_dir ? tau_inv(m) : tau(m);
  std::cout << rep_label(l, t) << "\n";
  return kOk;
}

int cmd_arseq(const std::string& path, const std::string& spec, bool as_json) {
  Loaded l = load(path);
  const auto& ar = ar_quiver(l.q);
  size_t x = resolve_node(l, spec);
  auto s = ar_sequence(ar, x);
  std::vector<std::string> mid;
  for (auto i : s.middle) mid.push_back(ar.label(i));
  bool exact = is_exact(ar.nodes[s.left].rep, s.middle_rep, ar.nodes[s.right].rep, s.f, s.g);
  if (as_json) {
    emit({{"left", ar.label(s.left)}, {"middle", mid}, {"right", ar.label(s.right)}, {"exact", exact}});
  } else {
    std::cout << "0 -> " << ar.label(s.left) << " ->";
    for (size_t i = 0; i < mid.size(); ++i) std::cout << (i ? " + " : " ") << mid[i];
    std::cout << " -> " << ar.label(s.right) << " -> 0\n";
  }
  return exact ? kOk : kMismatch;
}

json mono_json(const ARQuiver& ar, const Loaded& l, const SectionalMono& sm) {
  std::vector<std::string> path;
  for (auto n : sm.path.nodes) path.push_back(ar.label(n));
  const QRep& y = ar.nodes[sm.y].rep;
  const QRep& x = ar.nodes[sm.x].rep;
  auto s = quotient(y, image(sm.path.composite)).rep;
  auto table = hom_ext_table(x, y, s);
  return {{"x", ar.label(sm.x)}, {"y", ar.label(sm.y)}, {"s", rep_label(l, s)}, {"path", path},
          {"table_ok", table == expected_mono_table()}};
}

int cmd_secmono(const std::string& path, const std::string& spec, bool as_json) {
  Loaded l = load(path);
  const auto& ar = ar_quiver(l.q);
  size_t y = resolve_node(l, spec);
  auto ms = minimal_sectional_monos(ar, y);
  json out = json::array();
  for (const auto& sm : ms) out.push_back(mono_json(ar, l, sm));
  if (as_json) {
    emit(out);
  } else {
    for (const auto& m : out) {
      std::cout << m["x"].get<std::string>() << " -> " << m["y"].get<std::string>() << "  S=" << m["s"].get<std::string>()
                << "  path";
      for (const auto& p : m["path"]) std::cout << " " << p.get<std::string>();
      std::cout << (m["table_ok"].get<bool>() ? "" : "  (Hom/Ext table differs)") << "\n";
    }
  }
  return kOk;
}

int cmd_xs(const std::string& path, const std::string& spec, size_t choice, bool as_json) {
  Loaded l = load(path);
  const auto& ar = ar_quiver(l.q);
  size_t y = resolve_node(l, spec);
  auto ms = minimal_sectional_monos(ar, y);
  if (choice >= ms.size())
    throw UsageError(ar.label(y) + " has " + std::to_string(ms.size()) + " minimal sectional monos");
  const auto& sm = ms[choice];
  const QRep& yr = ar.nodes[y].rep;
  const QRep& xr = ar.nodes[sm.x].rep;
  auto s = quotient(yr, image(sm.path.composite)).rep;
  auto xs = compute_X_S(xr, s);
  auto sx = compute_S_X(xr, s);
  json out = mono_json(ar, l, sm);
  out["x_s"] = rep_label(l, sub_rep(xr, xs));
  out["s_x"] = rep_label(l, sub_rep(s, sx));
  out["s_x_is_s"] = sub_equal(sx, full_subspaces(s));
  if (as_json) {
    emit(out);
  } else {
    std::cout << "X   " << out["x"].get<std::string>() << "\nY   " << out["y"].get<std::string>() << "\nS   "
              << out["s"].get<std::string>() << "\nX_S " << out["x_s"].get<std::string>() << "\nS^X "
              << out["s_x"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_count(const Selectors& s, const std::string& oracle, bool cross) {
  if (oracle != "submodules" && oracle != "chains") throw UsageError("--oracle must be 'submodules' or 'chains'");
  Job j = make_job(s);
  int code = kOk;
  for (const auto& f : j.fs)
    for (auto p : s.primes) {
      auto k = field_for(p, j.m);
      mpz_class c = brute_f(j, f, k, oracle == "chains");
      CountingRecord r{j.l.path, j.label, j.eq.d, j.eq.strict, f, p, c, {}};
      json rec = record_to_json(r);
      if (cross) {
        mpz_class other = brute_f(j, f, k, oracle != "chains");
        rec["cross_check"] = other == c;
        if (other != c) code = kMismatch;
      }
      emit(rec, false);
    }
  return code;
}

struct PaveFlags {
  bool no_backtrack = false;
  bool any_sectional = false;
  bool no_trail = false;
};

int cmd_pave(const Selectors& s, const PaveFlags& pf) {
  Job j = make_job(s);
  require_dynkin(j.l, "pave");
  PaveOptions po;
  po.backtrack = !pf.no_backtrack;
  po.irreducible_u = !pf.any_sectional;
  PavingEngine eng(j.l.q, j.eq.d, j.eq.strict, po);
  std::vector<PrimeField> fields;
  for (auto p : s.primes) fields.push_back(field_for(p, j.m));
  json results = json::array();
  bool all_resolved = true, all_match = true;
  for (const auto& f : j.fs) {
    auto o = eng.pave(j.m, f);
    json r = {{"f", f}, {"levels", format_levels(j.eq, f)}, {"resolved", o.resolved}};
    if (o.resolved) {
      r["cells"] = cells_to_json(o.cells);
      r["cell_string"] = cells_str(o.cells);
    } else {
      r["failure"] = o.failure;
      all_resolved = false;
    }
    json ver = json::array();
    for (const auto& k : fields) {
      mpz_class bf = brute_f(j, f, k, false);
      json v = {{"q", k.p}, {"brute_force", bf.get_str()}};
      bool ok = true;
      try {
        mpz_class rec = eng.count_recursive(j.m, f, k.p);
        v["count_recursive"] = rec.get_str();
        ok = rec == bf;
      } catch (const RecursionError& e) {
        v["count_recursive"] = nullptr;
        v["recursion_error"] = e.what();
        all_resolved = false;
      }
      if (o.resolved) {
        mpz_class pv = evaluate(o.cells, k.p);
        v["paving"] = pv.get_str();
        ok = ok && pv == bf;
      }
      v["match"] = ok;
      all_match = all_match && ok;
      ver.push_back(v);
    }
    r["verification"] = ver;
    results.push_back(r);
  }
  json events = json::array();
  for (const auto& e : eng.events())
    events.push_back({{"piece", e.piece}, {"candidate", e.candidate}, {"resolved", e.resolved}, {"failure", e.failure}});
  json report = {{"input",
                  {{"quiver", j.l.path},
                   {"type", j.l.shape.name()},
                   {"rep", j.label},
                   {"dims", j.m.dims},
                   {"d", j.eq.d},
                   {"strict", j.eq.strict},
                   {"primes", s.primes},
                   {"backtrack", po.backtrack},
                   {"irreducible_u", po.irreducible_u}}},
                 {"results", results},
                 {"backtracking", events}};
  if (!pf.no_trail) {
    json trail = json::array();
    for (const auto& t : eng.trail()) trail.push_back({{"piece", t.piece}, {"rule", t.rule}});
    report["trail"] = trail;
  }
  report["status"] = !all_match ? "mismatch" : !all_resolved ? "unresolved" : "verified";
  emit(report);
  if (!all_match) return kMismatch;
  return all_resolved ? kOk : kUnresolved;
}

int cmd_verify(const std::string& path, int d, bool strict, long ord_filter, std::vector<uint32_t> primes, size_t sample,
               uint64_t seed, uint64_t max_nodes, const PaveFlags& pf) {
  Loaded l = load(path);
  require_dynkin(l, "verify");
  PaveOptions po;
  po.backtrack = !pf.no_backtrack;
  po.irreducible_u = !pf.any_sectional;
  PavingEngine eng(l.q, d, strict, po);
  const auto& eq = eng.extended();
  const auto& ar = eng.ar();
  std::mt19937_64 rng(seed);
  EnumOptions opt;
  if (max_nodes) opt.max_nodes = max_nodes;
  long unresolved = 0, mismatched = 0, checked = 0;
  for (size_t i = 0; i < ar.nodes.size(); ++i) {
    const QRep& m = ar.nodes[i].rep;
    if (ord_filter > 0 && ord(m) != ord_filter) continue;
    std::vector<PrimeField> fields;
    for (auto p : primes) fields.push_back(field_for(p, m));
    auto fs = all_dimvecs(phi_dims(eq, m.dims));
    if (sample > 0 && sample < fs.size()) {
      std::shuffle(fs.begin(), fs.end(), rng);
      fs.resize(sample);
    }
    long u = 0, bad = 0;
    for (const auto& f : fs) {
      auto o = eng.pave(m, f);
      bool stuck = !o.resolved;
      for (const auto& k : fields) {
        mpz_class bf = count_submodules(phi(*reduce_mod(m, k), eq), f, opt);
        if (o.resolved && evaluate(o.cells, k.p) != bf) ++bad;
        try {
          if (eng.count_recursive(m, f, k.p) != bf) ++bad;
        } catch (const RecursionError&) {
          stuck = true;
        }
      }
      if (stuck) ++u;
    }
    checked += (long)fs.size();
    unresolved += u;
    mismatched += bad;
    std::cout << ar.label(i) << "  f's " << fs.size() << "  unresolved " << u << "  mismatches " << bad << "\n";
  }
  std::cout << "checked " << checked << "  unresolved " << unresolved << "  mismatches " << mismatched << "\n";
  if (mismatched) return kMismatch;
  return unresolved ? kUnresolved : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine pavings of quiver flag varieties"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string type;
  int rank = 0;
  bool maximal = false, delta = false;
  auto* roots = app.add_subcommand("roots", "positive roots or the minimal imaginary root");
  roots->add_option("--type", type, "A, D, E, affA, affD or affE")->required();
  roots->add_option("--rank", rank, "rank")->required();
  roots->add_flag("--maximal", maximal, "maximal root only");
  roots->add_flag("--delta", delta, "minimal imaginary root");
  roots->add_flag("--json", as_json);

  std::string qpath, spec, spec2, dot;
  int d = 1, degree = 1;
  bool strict = false, inverse_dir = false;
  size_t choice = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Dynkin or affine type of a quiver");
  classify_cmd->add_option("quiver", qpath)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* indec = app.add_subcommand("indec", "indecomposable representations");
  indec->add_option("quiver", qpath)->required();
  indec->add_option("--root", spec, "print this indecomposable");
  indec->add_flag("--json", as_json);

  int rd = 0;
  auto* hom = app.add_subcommand("hom", "dim Hom(M, N)");
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N)");
  for (auto* c : {hom, ext}) {
    c->add_option("quiver", qpath)->required();
    c->add_option("M", spec, "representation file or dimension vector")->required();
    c->add_option("N", spec2, "representation file or dimension vector")->required();
    c->add_option("--d", rd, "compute over the extended algebra of this flag length");
    c->add_flag("--strict", strict);
  }
  ext->add_option("--degree", degree, "0, 1 or 2")->check(CLI::Range(0, 2));

  auto* extq = app.add_subcommand("extquiver", "the extended quiver");
  extq->add_option("quiver", qpath)->required();
  extq->add_option("--d", d)->check(CLI::PositiveNumber);
  extq->add_flag("--strict", strict);
  extq->add_option("--dot", dot, "write DOT to this file");
  extq->add_flag("--json", as_json);

  auto* phic = app.add_subcommand("phi", "the bound module Phi(M)");
  phic->add_option("quiver", qpath)->required();
  phic->add_option("M", spec)->required();
  phic->add_option("--d", d)->check(CLI::PositiveNumber);
  phic->add_flag("--strict", strict);

  auto* arc = app.add_subcommand("ar", "Auslander-Reiten quiver");
  arc->add_option("quiver", qpath)->required();
  arc->add_option("--dot", dot, "write DOT to this file");
  arc->add_flag("--json", as_json);

  auto* tauc = app.add_subcommand("tau", "Auslander-Reiten translate");
  tauc->add_option("quiver", qpath)->required();
  tauc->add_option("M", spec)->required();
  tauc->add_flag("--inverse", inverse_dir, "inverse translate");

  auto* arseq = app.add_subcommand("arseq", "almost split sequence ending in X");
  arseq->add_option("quiver", qpath)->required();
  arseq->add_option("X", spec)->required();
  arseq->add_flag("--json", as_json);

  auto* secmono = app.add_subcommand("secmono", "minimal sectional monos into Y, in selection order");
  secmono->add_option("quiver", qpath)->required();
  secmono->add_option("Y", spec)->required();
  secmono->add_flag("--json", as_json);

  auto* xs = app.add_subcommand("xs", "X_S and S^X for a minimal sectional mono into Y");
  xs->add_option("quiver", qpath)->required();
  xs->add_option("Y", spec)->required();
  xs->add_option("--choice", choice, "index into the selection order");
  xs->add_flag("--json", as_json);

  Selectors sel;
  std::string oracle = "submodules";
  bool cross = false;
  auto* count = app.add_subcommand("count", "brute-force point counts");
  add_selectors(count, sel);
  count->add_option("--oracle", oracle, "submodules or chains");
  count->add_flag("--cross-check", cross, "run both oracles and compare");

  PaveFlags pf;
  auto* pave = app.add_subcommand("pave", "affine paving with verification");
  add_selectors(pave, sel);
  for (auto* c : {pave}) {
    c->add_flag("--no-backtrack", pf.no_backtrack, "give up after the first mono choice");
    c->add_flag("--any-sectional-u", pf.any_sectional, "split U pieces along any minimal sectional mono");
    c->add_flag("--no-trail", pf.no_trail, "omit the recursion trail");
  }

  long ord_filter = 0;
  size_t sample = 0;
  uint64_t seed = 1, max_nodes = 0;
  std::vector<uint32_t> vprimes{2, 3};
  auto* verify = app.add_subcommand("verify", "pave every indecomposable and compare with brute force");
  verify->add_option("quiver", qpath)->required();
  verify->add_option("--d", d)->check(CLI::PositiveNumber);
  verify->add_flag("--strict", strict);
  verify->add_option("--ord", ord_filter, "only indecomposables of this order");
  verify->add_option("--q", vprimes, "field sizes (primes)");
  verify->add_option("--sample", sample, "random sample of f's per indecomposable");
  verify->add_option("--seed", seed, "seed for --sample");
  verify->add_option("--max-nodes", max_nodes);
  verify->add_flag("--no-backtrack", pf.no_backtrack);
  verify->add_flag("--any-sectional-u", pf.any_sectional);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (sel.primes.empty()) sel.primes = pave->parsed() ? std::vector<uint32_t>{2, 3} : std::vector<uint32_t>{2};

  try {
    if (roots->parsed()) return cmd_roots(type, rank, maximal, delta, as_json);
    if (classify_cmd->parsed()) return cmd_classify(qpath, as_json);
    if (indec->parsed()) return cmd_indec(qpath, spec, as_json);
    if (hom->parsed()) return cmd_hom_ext(qpath, spec, spec2, false, 0, rd, strict);
    if (ext->parsed()) return cmd_hom_ext(qpath, spec, spec2, true, degree, rd, strict);
    if (extq->parsed()) return cmd_extquiver(qpath, d, strict, as_json, dot);
    if (phic->parsed()) return cmd_phi(qpath, spec, d, strict);
    if (arc->parsed()) return cmd_ar(qpath, dot, as_json);
    if (tauc->parsed()) return cmd_tau(qpath, spec, inverse_dir);
    if (arseq->parsed()) return cmd_arseq(qpath, spec, as_json);
    if (secmono->parsed()) return cmd_secmono(qpath, spec, as_json);
    if (xs->parsed()) return cmd_xs(qpath, spec, choice, as_json);
    if (count->parsed()) return cmd_count(sel, oracle, cross);
    if (pave->parsed()) return cmd_pave(sel, pf);
    if (verify->parsed()) return cmd_verify(qpath, d, strict, ord_filter, vprimes, sample, seed, max_nodes, pf);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
