#include "qflag/paving.hpp"

#include "qflag/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qflag {

namespace {

const Rationals QQ{};

mpz_class power(long q, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)q, (unsigned long)e);
  return r;
}

bool is_scalar(const QMatrix& m) { return m(0, 1) == 0 && m(1, 0) == 0 && m(0, 0) == m(1, 1); }

PaveOutcome resolved(CellMultiset c) { return {true, std::move(c), {}}; }
PaveOutcome empty_piece() { return {true, {}, {}}; }
PaveOutcome point() { return {true, {{0, 1}}, {}}; }

PaveOutcome failed(const std::string& where, const std::string& why, const std::vector<std::string>& inner = {}) {
  PaveOutcome o;
  o.failure.push_back(where + ": " + why);
  o.failure.insert(o.failure.end(), inner.begin(), inner.end());
  return o;
}

void check_descent(long child, long parent) {
  if (child >= parent) throw std::logic_error("paving recursion does not descend");
}

}  // namespace

mpz_class evaluate(const CellMultiset& c, long q) {
  mpz_class s = 0;
  for (const auto& [d, m] : c) s += m * power(q, d);
  return s;
}

long cell_total(const CellMultiset& c) {
  mpz_class s = 0;
  for (const auto& kv : c) s += kv.second;
  return s.get_si();
}

CellMultiset shift(const CellMultiset& c, long by) {
  CellMultiset r;
  for (const auto& [d, m] : c) r[d + by] = m;
  return r;
}

CellMultiset product(const CellMultiset& a, const CellMultiset& b) {
  CellMultiset r;
  for (const auto& [d1, m1] : a)
    for (const auto& [d2, m2] : b) r[d1 + d2] += m1 * m2;
  return r;
}

void accumulate(CellMultiset& into, const CellMultiset& c) {
  for (const auto& [d, m] : c) into[d] += m;
}

std::string cells_str(const CellMultiset& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, m] : c) {
    os << (first ? "" : ", ") << d << ": " << m.get_str();
    first = false;
  }
  os << "}";
  return os.str();
}

std::optional<SmallOrderShape> small_order_structure(const QRep& t, const DimVec& f) {
  const Quiver& q = *t.q;
  size_t n = q.num_vertices();
  for (size_t v = 0; v < n; ++v) {
    if (t.dims[v] > 2) return std::nullopt;
    if (f[v] < 0 || f[v] > t.dims[v]) return SmallOrderShape{true, 0};
  }
  for (size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if ((long)rank(t.maps[a]) != std::min(t.dims[ar.src], t.dims[ar.tgt])) return std::nullopt;
  }
  auto is_free = [&](size_t v) { return t.dims[v] == 2 && f[v] == 1; };
  std::vector<long> comp(n, -1);
  std::vector<QMatrix> transport(n, QMatrix(QQ, 0, 0));
  long ncomp = 0;
  for (size_t s = 0; s < n; ++s) {
    if (!is_free(s) || comp[s] >= 0) continue;
    comp[s] = ncomp;
    transport[s] = QMatrix::identity(QQ, 2);
    std::vector<size_t> stack{s};
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      auto visit = [&](size_t w, const QMatrix& tw) -> bool {
        if (comp[w] < 0) {
          comp[w] = ncomp;
          transport[w] = tw;
          stack.push_back(w);
          return true;
        }
        return is_scalar(inverse(transport[w]) * tw);
      };
      for (auto a : q.out_arrows(v)) {
        size_t w = q.arrow(a).tgt;
        if (is_free(w) && !visit(w, t.maps[a] * transport[v])) return std::nullopt;
      }
      for (auto a : q.in_arrows(v)) {
        size_t w = q.arrow(a).src;
        if (is_free(w) && !visit(w, inverse(t.maps[a]) * transport[v])) return std::nullopt;
      }
    }
    ++ncomp;
  }
  std::vector<std::optional<QMatrix>> forced((size_t)ncomp);
  bool empty = false;
  auto force = [&](long c, const QMatrix& line) {
    QMatrix l = column_space(line);
    auto& slot = forced[(size_t)c];
    if (!slot) slot = l;
    else if (*slot != l) empty = true;
  };
  auto fixed = [&](size_t v) {
    return f[v] == 0 ? QMatrix(QQ, (size_t)t.dims[v], 0) : QMatrix::identity(QQ, (size_t)t.dims[v]);
  };
  for (size_t a = 0; a < q.num_arrows() && !empty; ++a) {
    size_t u = q.arrow(a).src, w = q.arrow(a).tgt;
    const QMatrix& m = t.maps[a];
    bool fu = is_free(u), fw = is_free(w);
    if (fu && fw) continue;
    if (!fu && !fw) {
      if (!subspace_contains(fixed(w), m * fixed(u))) empty = true;
    } else if (fu) {
      QMatrix pre = preimage(QMatrix(m * transport[u]), fixed(w));
      size_t r = rank(pre);
      if (r == 0) empty = true;
      else if (r == 1) force(comp[u], pre);
    } else {
      QMatrix img = column_space(QMatrix(m * fixed(u)));
      if (img.cols() == 2) empty = true;
      else if (img.cols() == 1) force(comp[w], inverse(transport[w]) * img);
    }
  }
  if (empty) return SmallOrderShape{true, 0};
  long factors = 0;
  for (const auto& s : forced)
    if (!s) ++factors;
  return SmallOrderShape{false, factors};
}

PavingEngine::PavingEngine(const QuiverPtr& q, int d, bool strict, PaveOptions opt)
    : eq_(build_extended(q, d, strict)), ar_(ar_quiver(q)), opt_(opt) {}

DimVec PavingEngine::phi_total(const std::vector<DimVec>& summands) const {
  DimVec s(eq_.n(), 0);
  for (const auto& r : summands) s = vadd(s, r);
  return phi_dims(eq_, s);
}

std::vector<DimVec> PavingEngine::roots_of(const QRep& m) const {
  std::vector<DimVec> out;
  if (m.total_dim() == 0) return out;
  for (const auto& [root, mult] : decompose(m))
    for (long i = 0; i < mult; ++i) out.push_back(root);
  return out;
}

std::string PavingEngine::key(const Piece& p) const {
  std::ostringstream os;
  if (p.kind == Piece::Kind::GR) {
    os << "GR";
    for (const auto& r : p.summands) os << "|" << dimvec_str(r);
  } else {
    os << "U|" << dimvec_str(p.a);
    for (const auto& m : canonical(p.b)) os << "|" << m.str();
  }
  os << "|" << dimvec_str(p.f);
  return os.str();
}

std::string PavingEngine::describe(const Piece& p) const {
  std::ostringstream os;
  if (p.kind == Piece::Kind::GR) {
    os << "Gr(";
    if (p.summands.empty()) os << "0";
    for (size_t i = 0; i < p.summands.size(); ++i) os << (i ? "+" : "") << ar_.label(p.summands[i]);
    os << ")";
  } else {
    os << "U(" << ar_.label(p.a) << ", " << ar_.label(sub_dims(p.b)) << ")";
  }
  os << " f=" << format_levels(eq_, p.f);
  return os.str();
}

std::vector<TrailEntry> PavingEngine::trail() const {
  std::vector<TrailEntry> out;
  for (const auto& [k, r] : rules_) out.push_back({k, r});
  return out;
}

size_t PavingEngine::split_index(const std::vector<DimVec>& summands) {
  auto ext = [&](const DimVec& a, const DimVec& b) {
    auto it = ext1_.find({a, b});
    if (it != ext1_.end()) return it->second;
    long e = ext1_dim(ar_.nodes[ar_.node(a)].rep, ar_.nodes[ar_.node(b)].rep);
    ext1_[{a, b}] = e;
    return e;
  };
  for (size_t i = 0; i < summands.size(); ++i) {
    bool ok = true;
    for (const auto& other : summands)
      if (ext(other, summands[i]) != 0) ok = false;
    if (ok) return i;
  }
  throw std::logic_error("no summand N with [M/N, N]^1 = 0");
}

const std::vector<SectionalMono>& PavingEngine::monos(size_t y) {
  auto it = monos_.find(y);
  if (it == monos_.end()) it = monos_.emplace(y, minimal_sectional_monos(ar_, y)).first;
  return it->second;
}

const PavingEngine::MonoData& PavingEngine::mono(size_t y, size_t k) {
  auto it = mono_data_.find({y, k});
  if (it != mono_data_.end()) return it->second;
  MonoData md;
  const auto& sm = monos(y)[k];
  md.x = sm.x;
  md.emb = sm.path.composite;
  md.image = image(md.emb);
  const QRep& yr = ar_.nodes[y].rep;
  const QRep& xr = ar_.nodes[sm.x].rep;
  md.s = quotient(yr, md.image);
  try {
    if (!(hom_ext_table(xr, yr, md.s.rep) == expected_mono_table())) {
      md.why = "Hom/Ext table of (X, Y, Y/X) differs from the required values";
    } else {
      md.s_roots = roots_of(md.s.rep);
      md.x_s = compute_X_S(xr, md.s.rep);
      md.valid = true;
    }
  } catch (const std::exception& e) {
    md.why = e.what();
  }
  return mono_data_.emplace(std::make_pair(y, k), std::move(md)).first->second;
}

PaveOutcome PavingEngine::pave(const QRep& m, const DimVec& f) {
  if (!ar_.q || !(*m.q == *ar_.q)) throw std::invalid_argument("pave: representation is over a different quiver");
  return gr(roots_of(m), f);
}

PaveOutcome PavingEngine::pave_piece(const Piece& p) {
  if (p.kind == Piece::Kind::GR) {
    auto s = p.summands;
    std::sort(s.begin(), s.end());
    return gr(s, p.f);
  }
  return u(p.a, p.b, p.f);
}

PaveOutcome PavingEngine::gr(const std::vector<DimVec>& summands, const DimVec& f) {
  Piece p{Piece::Kind::GR, summands, {}, {}, f};
  std::string k = key(p);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  DimVec full = phi_total(summands);
  if (f.size() != full.size()) throw std::invalid_argument("dimension vector has the wrong length");
  PaveOutcome out;
  std::string rule;
  if (!leq(f, full) || std::any_of(f.begin(), f.end(), [](long x) { return x < 0; })) {
    out = empty_piece();
    rule = "out of range";
  } else if (total(f) == 0 || f == full) {
    out = point();
    rule = "point";
  } else if (summands.size() > 1) {
    out = split_sum(summands, f);
    rule = "split direct sum";
  } else {
    size_t y = ar_.node(summands[0]);
    const QRep& yr = ar_.nodes[y].rep;
    if (ord(yr) <= 2) {
      auto s = small_order_structure(phi(yr, eq_), f);
      if (!s) {
        out = failed(describe(p), "small-order product structure not found");
      } else if (s->empty) {
        out = empty_piece();
      } else {
        CellMultiset c;
        mpz_class b = 1;
        for (long j = 0; j <= s->factors; ++j) {
          c[j] = b;
          b = b * (s->factors - j) / (j + 1);
        }
        out = resolved(c);
      }
      rule = "small order, product of projective lines";
    } else {
      const auto& ms = monos(y);
      bool any_failure = false;
      out = failed(describe(p), "no usable minimal sectional mono");
      for (size_t i = 0; i < ms.size(); ++i) {
        const MonoData& md = mono(y, i);
        std::string cand = ar_.label(md.x) + " -> " + ar_.label(y);
        if (!md.valid) {
          events_.push_back({describe(p), cand, false, {md.why}});
          any_failure = true;
          continue;
        }
        PaveOutcome o = mono_strata(y, md, f, nullptr);
        if (o.resolved) {
          if (any_failure) events_.push_back({describe(p), cand, true, {}});
          out = o;
          rule = "sectional mono strata via " + cand;
          break;
        }
        any_failure = true;
        events_.push_back({describe(p), cand, false, o.failure});
        if (i == 0) out = failed(describe(p), "mono " + cand + " failed", o.failure);
        if (!opt_.backtrack) break;
      }
    }
  }
  if (out.resolved) rules_[k] = rule;
  memo_[k] = out;
  return out;
}

PaveOutcome PavingEngine::split_sum(const std::vector<DimVec>& summands, const DimVec& f) {
  size_t i = split_index(summands);
  std::vector<DimVec> rest;
  for (size_t j = 0; j < summands.size(); ++j)
    if (j != i) rest.push_back(summands[j]);
  std::vector<DimVec> first{summands[i]};
  DimVec d1 = phi_total(first), d2 = phi_total(rest);
  DimVec bound(f.size());
  for (size_t v = 0; v < f.size(); ++v) bound[v] = std::min(f[v], d1[v]);
  CellMultiset acc;
  for (const auto& f1 : all_dimvecs(bound)) {
    DimVec f2 = vsub(f, f1);
    if (!leq(f2, d2)) continue;
    PaveOutcome c1 = gr(first, f1);
    if (c1.resolved && c1.cells.empty()) continue;
    PaveOutcome c2 = gr(rest, f2);
    if (c2.resolved && c2.cells.empty()) continue;
    if (!c1.resolved) return c1;
    if (!c2.resolved) return c2;
    long r = euler_R(eq_, f2, vsub(d1, f1));
    if (r < 0)
      return failed("split " + dimvec_str(f1) + " + " + dimvec_str(f2), "negative bundle rank " + std::to_string(r));
    accumulate(acc, shift(product(c1.cells, c2.cells), r));
  }
  return resolved(acc);
}

PaveOutcome PavingEngine::mono_strata(size_t y, const MonoData& md, const DimVec& f, const QSub* pi_b) {
  const DimVec& xroot = ar_.nodes[md.x].root;
  DimVec dx = phi_dims(eq_, xroot);
  DimVec ds = phi_dims(eq_, md.s.rep.dims);
  check_descent(total(xroot), total(ar_.nodes[y].root));
  check_descent(total(md.s.rep.dims), total(ar_.nodes[y].root));
  DimVec bound(f.size());
  for (size_t v = 0; v < f.size(); ++v) bound[v] = std::min(f[v], dx[v]);
  CellMultiset acc;
  for (const auto& f1 : all_dimvecs(bound)) {
    DimVec g = vsub(f, f1);
    if (!leq(g, ds)) continue;
    if (pi_b && total(g) == 0) continue;
    PaveOutcome inner;
    if (g == ds) {
      inner = u(xroot, md.x_s, f1);
    } else {
      PaveOutcome c1 = gr({xroot}, f1);
      if (c1.resolved && c1.cells.empty()) continue;
      PaveOutcome c2 = pi_b ? u_quotient(md, *pi_b, g) : gr(md.s_roots, g);
      if (c2.resolved && c2.cells.empty()) continue;
      if (!c1.resolved) return c1;
      if (!c2.resolved) return c2;
      inner = resolved(product(c1.cells, c2.cells));
    }
    if (!inner.resolved) return inner;
    if (inner.cells.empty()) continue;
    long r = euler_R(eq_, g, vsub(dx, f1));
    if (r < 0)
      return failed("Gr(" + ar_.label(y) + ") stratum (" + dimvec_str(f1) + ", " + dimvec_str(g) + ")",
                    "negative bundle rank " + std::to_string(r));
    accumulate(acc, shift(inner.cells, r));
  }
  return resolved(acc);
}

PaveOutcome PavingEngine::u_quotient(const MonoData& md, const QSub& pi_b, const DimVec& g) {
  if (total(sub_dims(pi_b)) == 0) {
    if (total(g) == 0) return empty_piece();
    return gr(md.s_roots, g);
  }
  if (md.s_roots.size() != 1) return failed("U(" + ar_.label(md.s.rep.dims) + ", ...)", "quotient is decomposable");
  size_t si = ar_.node(md.s_roots[0]);
  auto iso = find_iso(md.s.rep, ar_.nodes[si].rep);
  if (!iso) throw std::logic_error("quotient is not isomorphic to its knitted representative");
  return u(md.s_roots[0], push_forward(*iso, pi_b), g);
}

PaveOutcome PavingEngine::u(const DimVec& a, const QSub& b, const DimVec& f) {
  Piece p{Piece::Kind::U, {}, a, canonical(b), f};
  std::string k = key(p);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  size_t y = ar_.node(a);
  DimVec full = phi_dims(eq_, a);
  DimVec db = sub_dims(b);
  PaveOutcome out;
  std::string rule;
  if (!leq(f, full) || std::any_of(f.begin(), f.end(), [](long x) { return x < 0; }) || total(f) == 0 || db == a) {
    out = empty_piece();
    rule = "empty";
  } else if (total(db) == 0 || !leq(f, phi_dims(eq_, db))) {
    out = gr({a}, f);
    rule = "whole Grassmannian";
  } else {
    const auto& ms = monos(y);
    std::vector<size_t> order;
    for (size_t i = 0; i < ms.size(); ++i)
      if (mono(y, i).valid && sub_equal(mono(y, i).image, p.b)) order.push_back(i);
    for (size_t i = 0; i < ms.size(); ++i)
      if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    bool any_failure = false;
    out = failed(describe(p), opt_.irreducible_u ? "no irreducible mono comparable with the removed submodule" : "no minimal sectional mono comparable with the removed submodule");
    bool first = true;
    for (size_t i : order) {
      const MonoData& md = mono(y, i);
      if (!md.valid) continue;
      if (opt_.irreducible_u && ms[i].path.nodes.size() != 2) continue;
      std::string cand = ar_.label(md.x) + " -> " + ar_.label(y);
      PaveOutcome o;
      if (sub_contains(p.b, md.image)) {
        QSub pi_b = push_forward(md.s.proj, p.b);
        o = mono_strata(y, md, f, &pi_b);
        rule = "outer strata of mono " + cand;
      } else if (sub_contains(md.image, p.b)) {
        QSub zero = zero_subspaces(md.s.rep);
        PaveOutcome outer = mono_strata(y, md, f, &zero);
        if (!outer.resolved) {
          o = outer;
        } else {
          PaveOutcome inner = u(ar_.nodes[md.x].root, pull_back(md.emb, p.b), f);
          if (!inner.resolved) {
            o = inner;
          } else {
            o = outer;
            accumulate(o.cells, inner.cells);
          }
        }
        rule = "chain split through mono " + cand;
      } else {
        continue;
      }
      if (o.resolved) {
        if (any_failure) events_.push_back({describe(p), cand, true, {}});
        out = o;
        break;
      }
      any_failure = true;
      events_.push_back({describe(p), cand, false, o.failure});
      if (first) out = failed(describe(p), "mono " + cand + " failed", o.failure);
      first = false;
      if (!opt_.backtrack) break;
    }
  }
  if (out.resolved) rules_[k] = rule;
  memo_[k] = out;
  return out;
}

mpz_class PavingEngine::count_recursive(const QRep& m, const DimVec& f, long p) {
  if (!(*m.q == *ar_.q)) throw std::invalid_argument("count_recursive: representation is over a different quiver");
  return count_gr(roots_of(m), f, p);
}

mpz_class PavingEngine::count_gr(const std::vector<DimVec>& summands, const DimVec& f, long p) {
  Piece pc{Piece::Kind::GR, summands, {}, {}, f};
  std::string k = key(pc) + "|q=" + std::to_string(p);
  if (auto it = count_memo_.find(k); it != count_memo_.end()) return it->second;
  DimVec full = phi_total(summands);
  if (f.size() != full.size()) throw std::invalid_argument("dimension vector has the wrong length");
  mpz_class out = 0;
  if (!leq(f, full) || std::any_of(f.begin(), f.end(), [](long x) { return x < 0; })) {
    out = 0;
  } else if (total(f) == 0 || f == full) {
    out = 1;
  } else if (summands.size() > 1) {
    size_t i = split_index(summands);
    std::vector<DimVec> rest;
    for (size_t j = 0; j < summands.size(); ++j)
      if (j != i) rest.push_back(summands[j]);
    std::vector<DimVec> first{summands[i]};
    DimVec d1 = phi_total(first), d2 = phi_total(rest);
    DimVec bound(f.size());
    for (size_t v = 0; v < f.size(); ++v) bound[v] = std::min(f[v], d1[v]);
    for (const auto& f1 : all_dimvecs(bound)) {
      DimVec f2 = vsub(f, f1);
      if (!leq(f2, d2)) continue;
      mpz_class c1 = count_gr(first, f1, p);
      if (c1 == 0) continue;
      mpz_class c2 = count_gr(rest, f2, p);
      if (c2 == 0) continue;
      long r = euler_R(eq_, f2, vsub(d1, f1));
      if (r < 0) throw RecursionError("negative bundle rank " + std::to_string(r));
      out += power(p, r) * c1 * c2;
    }
  } else {
    size_t y = ar_.node(summands[0]);
    const QRep& yr = ar_.nodes[y].rep;
    if (ord(yr) <= 2) {
      auto s = small_order_structure(phi(yr, eq_), f);
      if (!s) throw std::logic_error("small-order product structure not found");
      out = s->empty ? mpz_class(0) : power(p + 1, s->factors);
    } else {
      const MonoData* md = nullptr;
      for (size_t i = 0; i < monos(y).size() && !md; ++i)
        if (mono(y, i).valid) md = &mono(y, i);
      if (!md) throw std::logic_error("no usable minimal sectional mono");
      const DimVec& xroot = ar_.nodes[md->x].root;
      DimVec dx = phi_dims(eq_, xroot), ds = phi_dims(eq_, md->s.rep.dims);
      std::vector<DimVec> xs_roots = roots_of(sub_rep(ar_.nodes[md->x].rep, md->x_s));
      std::sort(xs_roots.begin(), xs_roots.end());
      DimVec bound(f.size());
      for (size_t v = 0; v < f.size(); ++v) bound[v] = std::min(f[v], dx[v]);
      for (const auto& f1 : all_dimvecs(bound)) {
        DimVec g = vsub(f, f1);
        if (!leq(g, ds)) continue;
        mpz_class c;
        if (g == ds) {
          c = count_gr({xroot}, f1, p) - count_gr(xs_roots, f1, p);
        } else {
          c = count_gr({xroot}, f1, p);
          if (c != 0) c *= count_gr(md->s_roots, g, p);
        }
        if (c == 0) continue;
        long r = euler_R(eq_, g, vsub(dx, f1));
        if (r < 0) throw RecursionError("negative bundle rank " + std::to_string(r));
        out += power(p, r) * c;
      }
    }
  }
  count_memo_[k] = out;
  return out;
}

}  // namespace qflag
